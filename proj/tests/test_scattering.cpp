#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qboson/checks.hpp"
#include "qboson/scattering.hpp"

using namespace qboson;

namespace {
constexpr double pi = std::numbers::pi;
const FloatCtx ctx(0.5);

WavePacket reference_packet(int order = 32) {
  return make_packet(2, 1, {-1.6, -2.85}, {0.45, 0.25}, order);
}
}  // namespace

TEST_CASE("gradient of the eigenvalue symbol") {
  // r = 1: componentwise -2 sin
  const Vec xi{1.2, 0.3, -0.7};
  const Vec g = grad_epsilon(1, xi);
  for (int j = 0; j < 3; ++j)
    CHECK(g[j] == doctest::Approx(-2 * std::sin(xi[j])).epsilon(1e-14));

  // r = n: a single subset, all components equal
  const Vec gn = grad_epsilon(3, xi);
  const double expect = -2 * std::sin(xi[0] + xi[1] + xi[2]);
  for (double v : gn) CHECK(v == doctest::Approx(expect).epsilon(1e-14));
  CHECK(!in_regular_domain(3, xi));

  // central finite differences at random points
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = checks::rand_int(rng, 1, 4);
    const int r = checks::rand_int(rng, 1, n);
    const Vec p = checks::random_spectral_point(rng, n);
    const Vec grad = grad_epsilon(r, p);
    for (int j = 0; j < n; ++j) {
      Vec hi = p, lo = p;
      hi[j] += 1e-5;
      lo[j] -= 1e-5;
      const double fd = (epsilon_r(r, hi) - epsilon_r(r, lo)) / 2e-5;
      CHECK(std::abs(grad[j] - fd) < 1e-7);
    }
  }
}

TEST_CASE("regular domain and the velocity-sorting permutation") {
  // velocities (-2, 2): sorted decreasing by the transposition
  CHECK(sigma_xi(1, {pi / 2, -pi / 2}) == Perm({1, 0}));
  // equal velocities on the boundary between components
  CHECK(!in_regular_domain(1, {2 * pi / 3, pi / 3}));
  CHECK_THROWS_AS(sigma_xi(1, {2 * pi / 3, pi / 3}), std::domain_error);
  // one particle: nothing to sort
  CHECK(sigma_xi(1, {0.4}) == Perm::identity(1));
}

TEST_CASE("packet construction and validation") {
  const WavePacket pk = reference_packet();
  CHECK(pk.sigma_hat == Perm::identity(2));
  CHECK(pk.vclas_lo[0] > pk.vclas_hi[1]);  // ordered velocity boxes
  CHECK(flat_l2_norm(pk.values) > 0);

  // support leaving the open cube
  CHECK_THROWS_AS(make_packet(2, 1, {-1.6, -3.1}, {0.45, 0.25}, 8),
                  std::invalid_argument);
  // axis boxes must be strictly ordered
  CHECK_THROWS_AS(make_packet(2, 1, {-1.0, -1.3}, {0.3, 0.3}, 8),
                  std::invalid_argument);
  // support spanning both components of the regular domain: the ordering
  // permutation flips across sin xi_1 = sin xi_2
  CHECK_THROWS_AS(make_packet(2, 1, {2.0, 1.0}, {0.45, 0.35}, 8),
                  std::domain_error);
}

TEST_CASE("scattering multiplier") {
  const WavePacket pk = reference_packet(16);

  // unimodular: flat norm preserved
  const double base = flat_l2_norm(pk.values);
  for (int hp : {-2, -1, 1, 2}) {
    const auto mult = scattering_matrix_apply(ctx, 1, pk.values, hp);
    CHECK(flat_l2_norm(mult) == doctest::Approx(base).epsilon(1e-12));
  }

  // power +1 then -1 restores the values
  const auto fwd = scattering_matrix_apply(ctx, 1, pk.values, 2);
  const auto back = scattering_matrix_apply(ctx, 1, fwd, -2);
  for (size_t i = 0; i < back.size(); ++i)
    CHECK(std::abs(back.values[i] - pk.values.values[i]) < 1e-12);

  // half powers compose to the full multiplier
  const auto half1 = scattering_matrix_apply(ctx, 1, pk.values, 1);
  const auto full = scattering_matrix_apply(ctx, 1, pk.values, 2);
  const auto composed = scattering_matrix_apply(ctx, 1, half1, 1);
  for (size_t i = 0; i < full.size(); ++i)
    CHECK(std::abs(full.values[i] - composed.values[i]) < 1e-12);

  // q -> 0: the multiplier collapses to the identity
  const FloatCtx tiny(1e-6);
  const auto near_id = scattering_matrix_apply(tiny, 1, pk.values, 2);
  for (size_t i = 0; i < near_id.size(); ++i) {
    if (std::abs(pk.values.values[i]) < 1e-14) continue;
    CHECK(std::abs(near_id.values[i] / pk.values.values[i] - 1.0) < 1e-4);
  }
}

TEST_CASE("small-q packets collapse onto the phase model at t = 0") {
  const FloatCtx tiny(1e-6);
  const WavePacket pk = reference_packet(16);
  const auto win = ballistic_window(pk, 1.0, 10);
  const auto f0 = packet_phase_model(pk, 0.0, win.weights);
  for (int sign : {+1, -1}) {
    const auto fpm = packet_pm(tiny, pk, 0.0, sign, win.weights);
    CHECK(max_abs_diff(fpm, f0) < 1e-5);
  }
}

TEST_CASE("one-particle sector: no scattering") {
  const WavePacket pk = make_packet(1, 1, {-1.8}, {0.5}, 24);
  CHECK(pk.sigma_hat == Perm::identity(1));
  const auto win = ballistic_window(pk, 12.0, 10);
  const auto f0 = packet_phase_model(pk, 12.0, win.weights);
  const auto fp = packet_pm(ctx, pk, 12.0, +1, win.weights);
  const auto fm = packet_pm(ctx, pk, 12.0, -1, win.weights);
  CHECK(max_abs_diff(fp, f0) < 1e-12);
  CHECK(max_abs_diff(fm, f0) < 1e-12);
}

TEST_CASE("classical packet") {
  const WavePacket pk = reference_packet();
  CHECK_THROWS_AS(
      packet_classical(pk, 0.0, dominant_box(2, {-1, -1}, {1, 1})),
      std::domain_error);

  // supported exactly on the ballistic region
  const double t = 9.0;
  const auto win = ballistic_window(pk, t, 8);
  const auto fc = packet_classical(pk, t, win.weights);
  const Vec rho = rho_vector(2);
  for (const auto& [w, v] : fc.support()) {
    for (int k = 0; k < 2; ++k) {
      const double u = rho[k] + w[k];
      CHECK(u >= t * pk.vclas_lo[k] - 1e-12);
      CHECK(u <= t * pk.vclas_hi[k] + 1e-12);
    }
  }
  CHECK(!fc.empty());
}

TEST_CASE("asymptotic comparison of the three packets") {
  const WavePacket pk = reference_packet();
  const auto rows =
      asymptotics_scan(ctx, pk, {10.0, 20.0, 40.0, -10.0, -20.0, -40.0});

  const auto& r10 = rows[0];
  const auto& r20 = rows[1];
  const auto& r40 = rows[2];
  // matched branch decays, mismatched branch does not
  CHECK(r40.norm_fplus_minus_f0 < r10.norm_fplus_minus_f0 / 4.0);
  CHECK(r40.norm_fminus_minus_f0 > 0.5 * r40.norm_fpm);
  // classical comparison decays as well
  CHECK(r40.norm_f0_minus_fclas < r10.norm_f0_minus_fclas / 4.0);
  // monotone decay along the time ladder, 10% slack
  CHECK(r20.norm_fplus_minus_f0 < 1.1 * r10.norm_fplus_minus_f0);
  CHECK(r40.norm_fplus_minus_f0 < 1.1 * r20.norm_fplus_minus_f0);
  CHECK(r20.norm_f0_minus_fclas < 1.1 * r10.norm_f0_minus_fclas);
  CHECK(r40.norm_f0_minus_fclas < 1.1 * r20.norm_f0_minus_fclas);
  // norms conserved along the flow
  CHECK(r40.norm_fpm == doctest::Approx(r10.norm_fpm).epsilon(5e-3));

  // negative times mirror the matched branch
  const auto& rm10 = rows[3];
  const auto& rm20 = rows[4];
  const auto& rm40 = rows[5];
  CHECK(rm40.norm_fminus_minus_f0 < rm10.norm_fminus_minus_f0 / 4.0);
  CHECK(rm40.norm_fplus_minus_f0 > 0.5 * rm40.norm_fpm);
  CHECK(rm40.norm_f0_minus_fclas < rm10.norm_f0_minus_fclas / 4.0);
  CHECK(rm20.norm_fminus_minus_f0 < 1.1 * rm10.norm_fminus_minus_f0);
  CHECK(rm40.norm_fminus_minus_f0 < 1.1 * rm20.norm_fminus_minus_f0);
}

TEST_CASE("one-particle scan: no scattering, classical decay only") {
  const WavePacket pk = make_packet(1, 1, {-1.8}, {0.5}, 32);
  const auto rows = asymptotics_scan(ctx, pk, {8.0, 24.0});
  for (const auto& r : rows) {
    // both q-boson branches coincide with the phase model
    CHECK(r.norm_fplus_minus_f0 < 1e-10);
    CHECK(r.norm_fminus_minus_f0 < 1e-10);
  }
  // the classical comparison still sharpens with time
  CHECK(rows[1].norm_f0_minus_fclas < rows[0].norm_f0_minus_fclas / 2.0);
}
