#ifndef QBOSON_SCATTERING_HPP
#define QBOSON_SCATTERING_HPP

#include <vector>

#include "qboson/spectral.hpp"

namespace qboson {

// gradient of the eigenvalue symbol:
// d eps_r / d xi_j = -2 sum over r-subsets J containing j of
// sin(sum_{k in J} xi_k)
Vec grad_epsilon(int r, const Vec& xi);

// a point is regular when all components of grad eps_r are pairwise
// distinct (tolerance 1e-9)
bool in_regular_domain(int r, const Vec& xi, double tol = 1e-9);

// the permutation sorting grad eps_r(xi) strictly decreasing; constant on
// connected components of the regular domain. Throws on non-regular input.
Perm sigma_xi(int r, const Vec& xi, double tol = 1e-9);

// smooth compactly supported spectral profile: a product of per-axis bumps
// amplitude * prod_j exp(-1 / (1 - u_j^2)), u_j = (xi_j - center_j)/width_j,
// vanishing identically outside the box |u_j| < 1
struct BumpProfile {
  double amplitude = 1.0;
  Vec center, width;

  double operator()(const Vec& xi) const;
};

// A wave packet: a bump profile supported inside one connected component of
// the regular domain, sampled on a Gauss-Legendre grid over its own support
// box, together with the constant ordering permutation and the inflated
// bounding box of the classical velocities over the support.
struct WavePacket {
  int n = 0, r = 0;
  BumpProfile profile;
  std::shared_ptr<const QuadratureGrid> grid;
  SpectralFn values;
  Perm sigma_hat;
  Vec vclas_lo, vclas_hi;
};

// Validates the support box (inside the open alcove, constant ordering
// permutation, gradient gaps above tolerance at every sample point) and
// samples the profile. Throws with the offending sample point otherwise.
WavePacket make_packet(int n, int r, const Vec& center, const Vec& width,
                       int order, double amplitude = 1.0,
                       double velocity_margin = 0.35);

// nodewise multiplication by S_hat_{sigma_xi}(xi)^{half_power/2};
// half_power in {-2,-1,+1,+2} covers the powers -1, -1/2, +1/2, +1.
// Unimodular, so the flat L^2 norm is preserved. Throws if a node carrying
// a non-negligible value is not regular.
SpectralFn scattering_matrix_apply(const FloatCtx& ctx, int r,
                                   const SpectralFn& fhat, int half_power);

// phase-model packet f^(0)(t): inverse gauge transform at q = 0 of
// e^{-i t E_r} fhat
ComplexState packet_phase_model(const WavePacket& packet, double t,
                                const std::vector<Weight>& support);

// q-boson packets f_{+-}(t). The branch labelled time_sign = +1 is the one
// matching the phase-model packet as t -> +infinity and carries the
// multiplier S_hat_r^{-1/2}; time_sign = -1 matches at t -> -infinity with
// S_hat_r^{+1/2}.
ComplexState packet_pm(const FloatCtx& ctx, const WavePacket& packet, double t,
                       int time_sign, const std::vector<Weight>& support);

// classical (stationary-phase) packet, exactly zero outside the ballistic
// region {lambda : (rho+lambda) permuted by the flow ordering lies in
// t * V_clas}; undefined at t = 0
ComplexState packet_classical(const WavePacket& packet, double t,
                              const std::vector<Weight>& support);

// lattice window covering the origin spread and the ballistic cone at time
// t, extended by `margin` sites in every part direction
struct LatticeWindow {
  std::vector<int> lo, hi;
  std::vector<Weight> weights;

  bool on_boundary(const Weight& w) const;
};
LatticeWindow ballistic_window(const WavePacket& packet, double t, int margin);

struct ScanRow {
  double t = 0;
  double norm_fplus_minus_f0 = 0;
  double norm_fminus_minus_f0 = 0;
  double norm_f0_minus_fclas = 0;
  double norm_fpm = 0;
};

// difference and packet norms for each listed (nonzero) time, over
// tail-certified windows: the boundary-ring norm must stay below 1e-4 of
// the packet norm, else the window is grown
std::vector<ScanRow> asymptotics_scan(const FloatCtx& ctx,
                                      const WavePacket& packet,
                                      const std::vector<double>& times);

}  // namespace qboson

#endif
