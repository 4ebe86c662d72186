#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qboson/permutation.hpp"
#include "qboson/qnum.hpp"

using namespace qboson;

namespace {

const ExactCtx half{Rational(1, 2)};

// brute-force length generating function of S_n
Rational length_generating_function(const ExactCtx& ctx, int n) {
  Rational out = 0;
  for (const Perm& s : all_permutations(n)) out += q_pow(ctx, s.length());
  return out;
}

// brute-force sum of q^{length} over the stabilizer of lambda
Rational stabilizer_generating_function(const ExactCtx& ctx,
                                        const Weight& lambda) {
  Rational out = 0;
  for (const Perm& s : all_permutations(lambda.size())) {
    bool fixes = true;
    for (int j = 0; j < lambda.size() && fixes; ++j)
      fixes = lambda[s.map[j]] == lambda[j];
    if (fixes) out += q_pow(ctx, s.length());
  }
  return out;
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(half, 0) == 0);
  CHECK(q_int(half, 1) == 1);
  CHECK(q_int(half, 3) == Rational(7, 4));  // 1 + 1/2 + 1/4
  FloatCtx f(0.3);
  CHECK(q_int(f, 2) == doctest::Approx(1.3));
}

TEST_CASE("q-factorials") {
  CHECK(q_factorial(half, 0) == 1);
  CHECK(q_factorial(half, 2) == q_int(half, 2));  // [2]! = [2][1] = 1 + q
  CHECK(q_factorial(half, 3) == Rational(21, 8));
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(half, 5, 0) == 1);
  CHECK(q_binomial(half, 2, 1) == Rational(3, 2));  // 1 + q
  // (4 choose 2) = 1 + q + 2q^2 + q^3 + q^4
  Rational q = half.q;
  CHECK(q_binomial(half, 4, 2) == 1 + q + 2 * q * q + q * q * q + q * q * q * q);
  CHECK_THROWS_AS(q_binomial(half, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(q_binomial(half, 2, -1), std::invalid_argument);
}

TEST_CASE("q-binomial symmetry and Pascal recursion, m <= 8") {
  for (int m = 0; m <= 8; ++m) {
    for (int k = 0; k <= m; ++k) {
      CHECK(q_binomial(half, m, k) == q_binomial(half, m, m - k));
      if (m >= 1 && k >= 1 && k <= m - 1) {
        CHECK(q_binomial(half, m, k) ==
              q_binomial(half, m - 1, k - 1) +
                  q_pow(half, k) * q_binomial(half, m - 1, k));
      }
    }
  }
}

TEST_CASE("Poincare polynomial of S_n vs brute-force lengths, n <= 6") {
  CHECK(poincare_sym(half, 1) == 1);
  CHECK(poincare_sym(half, 2) == 1 + half.q);
  for (int n = 0; n <= 6; ++n)
    CHECK(poincare_sym(half, n) == length_generating_function(half, n));
}

TEST_CASE("stabilizer Poincare polynomial vs brute force, n <= 5") {
  CHECK(poincare_stabilizer(half, Weight({3, 1, 0})) == 1);
  CHECK(poincare_stabilizer(half, Weight({0, 0})) == 1 + half.q);
  CHECK(poincare_stabilizer(half, Weight({2, 2, 2})) == q_factorial(half, 3));
  const std::vector<Weight> cases = {
      Weight{},            Weight({4}),           Weight({1, 1}),
      Weight({2, 1, 1}),   Weight({0, 0, 0, -1}), Weight({3, 3, 0, 0}),
      Weight({1, 1, 1, 1}), Weight({2, 1, 0, -1, -1}),
      Weight({0, 0, 0, 0, 0})};
  for (const Weight& lam : cases)
    CHECK(poincare_stabilizer(half, lam) ==
          stabilizer_generating_function(half, lam));
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(ExactCtx(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ExactCtx(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(FloatCtx(1.0), std::invalid_argument);
  CHECK_NOTHROW(FloatCtx(0.0));  // phase-model limit
}
