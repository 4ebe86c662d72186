#ifndef QBOSON_SPECTRAL_HPP
#define QBOSON_SPECTRAL_HPP

#include <memory>
#include <vector>

#include "qboson/quadrature.hpp"
#include "qboson/state.hpp"

namespace qboson {

// A function sampled on the nodes of a quadrature grid. `symmetrized`
// marks values that represent the symmetric extension of an alcove
// function to the whole cube (as produced by the forward transforms);
// alcove integrals of such data pick up the 1/n! cube factor. Profiles
// supported strictly inside the alcove carry symmetrized = false and
// integrate without the factor.
struct SpectralFn {
  std::shared_ptr<const QuadratureGrid> grid;
  bool symmetrized = false;
  std::vector<Complex> values;

  size_t size() const { return values.size(); }
};

// alcove-integration factor: 1/n! on symmetrized cube data, 1 otherwise
double alcove_factor(const SpectralFn& f);

// forward transform (F_q f)(xi) = sum_lambda f(lambda) conj(phi_xi(lambda))
// delta_n(lambda), sampled at every grid node; requires a cube grid.
SpectralFn fourier_forward(const FloatCtx& ctx, const ComplexState& f,
                           std::shared_ptr<const QuadratureGrid> grid);

// inverse transform f(lambda) = (2pi)^{-n} int_A fhat(xi) phi_xi(lambda)
// Delta(xi) dxi, by quadrature, on the requested support set
ComplexState fourier_inverse(const FloatCtx& ctx, const SpectralFn& fhat,
                             const std::vector<Weight>& support);

// quadrature estimate of <phi(lambda), phi(mu)>_Delta; the exact value is
// 1/delta_n(lambda) when lambda = mu and 0 otherwise
Complex verify_orthogonality(const FloatCtx& ctx, const Weight& lambda,
                             const Weight& mu, const QuadratureGrid& grid);

// gauge-transformed pair: Psi in place of phi and flat measure dxi
SpectralFn fourier_tilde(const FloatCtx& ctx, const ComplexState& f,
                         std::shared_ptr<const QuadratureGrid> grid);
ComplexState fourier_tilde_inverse(const FloatCtx& ctx, const SpectralFn& fhat,
                                   const std::vector<Weight>& support);

// (e^{i t Htilde_{q,r}} f)(lambda) = (2pi)^{-n} int_A e^{i t eps_r(xi)}
// fhat(xi) Psi_xi(lambda) dxi on the support set; t = 0 reduces to
// fourier_tilde_inverse
ComplexState evolve(const FloatCtx& ctx, int r, const SpectralFn& fhat,
                    double t, const std::vector<Weight>& support);

// nodewise multiplication by the eigenvalue symbol eps_r
SpectralFn apply_multiplier(int r, const SpectralFn& fhat);

// flat L^2(A) norm of the sampled profile, sqrt(int_A |fhat|^2 dxi)
double flat_l2_norm(const SpectralFn& fhat);

// all dominant weights with parts[j] in [lo[j], hi[j]]
std::vector<Weight> dominant_box(int n, const std::vector<int>& lo,
                                 const std::vector<int>& hi);

// flat l^2 norm over the full (finite) support
double flat_norm(const ComplexState& f);

}  // namespace qboson

#endif
