#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "qboson/checks.hpp"
#include "qboson/fock.hpp"
#include "qboson/hall_littlewood.hpp"

using namespace qboson;

namespace {
constexpr double pi = std::numbers::pi;
const FloatCtx ctx(0.5);
}  // namespace

TEST_CASE("C function") {
  CHECK(c_function(ctx, {0.7}) == Complex(1.0, 0.0));  // empty product

  // antipodal pair: theta = -pi, e^{i theta} = -1, value (1+q)/2
  const Complex c = c_function(ctx, {pi / 2, -pi / 2});
  CHECK(c.real() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(c.imag() == doctest::Approx(0.0).epsilon(1e-12));

  // q -> 0 limit drops the numerator factors
  const FloatCtx q0(0.0);
  const Vec xi{1.0, 0.2};
  const Complex z = std::exp(Complex(0, 1) * (xi[1] - xi[0]));
  const Complex expect = 1.0 / (1.0 - z);
  CHECK(std::abs(c_function(q0, xi) - expect) < 1e-14);

  CHECK_THROWS_AS(c_function(ctx, Vec{0.3, 0.3}), std::domain_error);
}

TEST_CASE("Hall-Littlewood function") {
  // n = 1: a plane wave
  CHECK(std::abs(hl_phi(ctx, {0.8}, Weight({3})) -
                 std::exp(Complex(0, 2.4))) < 1e-14);

  // n = 2 brute-force two-term sum
  const Vec xi{1.1, -0.4};
  const Weight lam({2, 0});
  Complex expect{0, 0};
  for (const auto& order : {Vec{xi[0], xi[1]}, Vec{xi[1], xi[0]}}) {
    expect += c_function(ctx, order) *
              std::exp(Complex(0, 1) * (lam[0] * order[0] + lam[1] * order[1]));
  }
  CHECK(std::abs(hl_phi(ctx, xi, lam) - expect) < 1e-13);

  // translational quasi-periodicity
  const Complex lhs = hl_phi(ctx, xi, Weight({1, 1}));
  const Complex rhs =
      std::exp(Complex(0, 1) * (xi[0] + xi[1])) * hl_phi(ctx, xi, Weight({0, 0}));
  CHECK(std::abs(lhs - rhs) < 1e-12);

  // phi_xi((0,...,0)) equals the stabilizer Poincare polynomial [n]!
  for (int n = 2; n <= 4; ++n) {
    std::mt19937_64 rng(n);
    const Vec p = checks::random_spectral_point(rng, n);
    const Weight zero(std::vector<int>(n, 0));
    CHECK(std::abs(hl_phi(ctx, p, zero) -
                   Complex(to_double(poincare_stabilizer(
                       ExactCtx(Rational(1, 2)), zero)))) < 1e-9);
  }

  // permutation invariance in xi
  std::mt19937_64 rng(9);
  const Vec p = checks::random_spectral_point(rng, 3);
  const Weight w = checks::random_dominant(rng, 3, -2, 2);
  const Complex base = hl_phi(ctx, p, w);
  for (const Perm& s : all_permutations(3))
    CHECK(std::abs(hl_phi(ctx, s.apply(p), w) - base) < 1e-10);
}

TEST_CASE("elementary symmetric functions and eigenvalue symbols") {
  const std::vector<Complex> x{2.0, 3.0, 5.0};
  CHECK(elementary_symmetric(0, x) == Complex(1, 0));
  CHECK(elementary_symmetric(1, x) == Complex(10, 0));
  CHECK(elementary_symmetric(3, x) == Complex(30, 0));
  CHECK(elementary_symmetric(4, x) == Complex(0, 0));

  CHECK(epsilon_r(1, {pi / 3, -pi / 3}) == doctest::Approx(2.0));
  CHECK(epsilon_r(2, {0.9, 0.1}) == doctest::Approx(2 * std::cos(1.0)));
  // boundary value: all cosines 1 gives twice the subset count
  CHECK(epsilon_r(2, {0.0, 0.0, 0.0, 0.0}) == doctest::Approx(12.0));

  // eps_r = e_r(e^{i xi}) + e_r(e^{-i xi}) at random points
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 4; ++n) {
    const Vec xi = checks::random_spectral_point(rng, n);
    std::vector<Complex> zp(n), zm(n);
    for (int j = 0; j < n; ++j) {
      zp[j] = std::exp(Complex(0, xi[j]));
      zm[j] = std::conj(zp[j]);
    }
    for (int r = 1; r <= n; ++r) {
      const Complex sum =
          elementary_symmetric(r, zp) + elementary_symmetric(r, zm);
      CHECK(std::abs(sum - Complex(epsilon_r(r, xi))) < 1e-12);
    }
  }
}

TEST_CASE("orthogonality density") {
  CHECK(density(ctx, {0.4}) == 1.0);
  // theta = -pi: 4 / (1+q)^2
  CHECK(density(ctx, {pi / 2, -pi / 2}) == doctest::Approx(4.0 / 2.25));
  // vanishes continuously at coinciding components
  CHECK(density(ctx, {0.5, 0.5}) == 0.0);
  CHECK(density(ctx, {0.5, 0.5 - 1e-8}) < 1e-14);
  // matches 1/|C|^2 away from walls
  std::mt19937_64 rng(13);
  const Vec xi = checks::random_spectral_point(rng, 3);
  const double viaC = 1.0 / std::norm(c_function(ctx, xi));
  CHECK(density(ctx, xi) == doctest::Approx(viaC).epsilon(1e-10));
}

TEST_CASE("two-particle phase factors") {
  CHECK(std::abs(s_phase(ctx, 0.0) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(s_phase(ctx, pi) - Complex(1, 0)) < 1e-15);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const double x = checks::rand_uniform(rng, -6.0, 6.0);
    CHECK(std::abs(std::abs(s_phase(ctx, x)) - 1.0) < 1e-14);
    const Complex h = s_half(ctx, x);
    CHECK(std::abs(h * h - s_phase(ctx, x)) < 1e-14);
  }
}

TEST_CASE("permutation phase products") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 4}) {
    const Vec xi = checks::random_spectral_point(rng, n);
    for (const Perm& s : all_permutations(n)) {
      const Complex v = s_hat_sigma(ctx, s, xi);
      CHECK(std::abs(std::abs(v) - 1.0) < 1e-13);
      const Complex h = s_hat_sigma_half(ctx, s, xi);
      CHECK(std::abs(h * h - v) < 1e-13);
    }
    // identity permutation: plain product of s over ordered pairs
    Complex expect{1, 0};
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) expect *= s_phase(ctx, xi[k] - xi[j]);
    CHECK(std::abs(s_hat_sigma(ctx, Perm::identity(n), xi) - expect) < 1e-13);
  }
}

TEST_CASE("gauge-transformed wave function") {
  // n = 1 reduces to the plane wave
  CHECK(std::abs(psi(ctx, {0.3}, Weight({2})) - std::exp(Complex(0, 0.6))) <
        1e-14);

  // modulus identity |Psi|^2 = Delta * delta_n * |phi|^2
  std::mt19937_64 rng(3);
  for (int n : {2, 3}) {
    const Vec xi = checks::random_spectral_point(rng, n);
    const Weight lam = checks::random_dominant(rng, n, -2, 2);
    const double lhs = std::norm(psi(ctx, xi, lam));
    const double rhs = density(ctx, xi) * delta_n(ctx, lam) *
                       std::norm(hl_phi(ctx, xi, lam));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }

  // agreement of the two displayed forms
  checks::Config cfg;
  cfg.trials = 40;
  const auto res = checks::check_two_form_agreement(ctx, cfg);
  INFO(res.witness);
  CHECK(res.failures == 0);
  CHECK(res.max_residual < 1e-10);

  // psi vanishes at alcove walls by pairwise cancellation
  CHECK(std::abs(psi(ctx, {0.4, 0.4}, Weight({1, 0}))) < 1e-13);
}

TEST_CASE("joint eigenfunction identities") {
  checks::Config cfg;
  cfg.trials = 8;
  const auto res = checks::check_eigenvalue_identities(ctx, cfg);
  INFO(res.witness, " max residual ", res.max_residual);
  CHECK(res.failures == 0);
}
