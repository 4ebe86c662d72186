#ifndef QBOSON_HALL_LITTLEWOOD_HPP
#define QBOSON_HALL_LITTLEWOOD_HPP

#include <vector>

#include "qboson/permutation.hpp"
#include "qboson/scalar.hpp"
#include "qboson/weight.hpp"

namespace qboson {

using Vec = std::vector<double>;

// open fundamental alcove: pi > xi_1 > xi_2 > ... > xi_n > -pi
bool in_alcove(const Vec& xi, double min_gap = 0.0);

// rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2)
Vec rho_vector(int n);

// C(xi) = prod_{j<k} (1 - q e^{i(xi_k - xi_j)}) / (1 - e^{i(xi_k - xi_j)});
// throws on coinciding components.
Complex c_function(const FloatCtx& ctx, const Vec& xi);

// Hall-Littlewood function phi_xi(lambda) = sum_sigma C(xi_sigma)
// e^{i lambda . xi_sigma}, by direct n!-term summation. The value extends
// continuously to coinciding components; near-coincident inputs are nudged
// apart by 1e-9 to keep the C-products finite.
Complex hl_phi(const FloatCtx& ctx, const Vec& xi, const Weight& lambda);

// r-th elementary symmetric function, e_0 = 1, zero for r > n
Complex elementary_symmetric(int r, const std::vector<Complex>& x);

// epsilon_r(xi) = 2 sum over r-subsets of cos(xi_{j_1} + ... + xi_{j_r})
//              = e_r(e^{i xi}) + e_r(e^{-i xi})
double epsilon_r(int r, const Vec& xi);

// orthogonality density Delta(xi) = prod_{j<k}
// |1 - e^{i(xi_k-xi_j)}|^2 / |1 - q e^{i(xi_k-xi_j)}|^2, computed in this
// pole-free form; vanishes at coinciding components.
double density(const FloatCtx& ctx, const Vec& xi);

// two-particle phase s(x) = (1 - q e^{ix}) / (1 - q e^{-ix}), unimodular,
// and its half-power s_half(x) = (1 - q e^{ix}) / |1 - q e^{ix}|
Complex s_phase(const FloatCtx& ctx, double x);
Complex s_half(const FloatCtx& ctx, double x);

// multi-particle phase attached to a permutation:
//   prod_{j<k, inv(sigma)_j < inv(sigma)_k} s(xi_k - xi_j)
// * prod_{j<k, inv(sigma)_j > inv(sigma)_k} conj(s(xi_k - xi_j))
Complex s_hat_sigma(const FloatCtx& ctx, const Perm& sigma, const Vec& xi);
// same product with s replaced by s_half
Complex s_hat_sigma_half(const FloatCtx& ctx, const Perm& sigma, const Vec& xi);

// Gauge-transformed wave function, evaluated as the alternating sum
//   delta_n(lambda)^{1/2} sum_sigma sign(sigma) s_hat_sigma_half(xi)
//       e^{i (rho + lambda) . xi_sigma}.
// Bounded and stable at alcove walls (it vanishes there by pairwise
// cancellation), hence the default for quadrature work.
Complex psi(const FloatCtx& ctx, const Vec& xi, const Weight& lambda);

// The same wave function via the gauge form
// i^{n(n-1)/2} Delta(xi)^{1/2} delta_n(lambda)^{1/2} phi_xi(lambda);
// agrees with psi on the alcove.
Complex psi_gauge_form(const FloatCtx& ctx, const Vec& xi,
                       const Weight& lambda);

}  // namespace qboson

#endif
