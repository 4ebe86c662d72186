#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qboson/checks.hpp"
#include "qboson/fock.hpp"
#include "qboson/serialize.hpp"

using namespace qboson;

namespace {
const ExactCtx half{Rational(1, 2)};
}

TEST_CASE("weight basics: multiplicity, insert, delete") {
  Weight lam({3, 1, 1, 0});
  CHECK(lam.multiplicity(1) == 2);
  CHECK(lam.multiplicity(5) == 0);
  CHECK(Weight({0, 0}).multiplicity(0) == 2);

  CHECK(Weight({3, 1, 0}).inserted(2) == Weight({3, 2, 1, 0}));
  CHECK(Weight({3, 2, 1, 0}).deleted(2) == Weight({3, 1, 0}));
  CHECK(Weight{}.inserted(5) == Weight({5}));
  CHECK_THROWS_AS(Weight({3, 1, 0}).deleted(2), std::invalid_argument);
  CHECK_THROWS_AS(Weight({1, 2}), std::invalid_argument);

  // delete(insert(lam, l), l) = lam on random cases
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const int n = checks::rand_int(rng, 0, 5);
    const Weight w = checks::random_dominant(rng, n, -4, 4);
    const int l = checks::rand_int(rng, -5, 5);
    CHECK(w.inserted(l).deleted(l) == w);
  }
}

TEST_CASE("representation on indicator states") {
  // beta*_0 |(0)> = [2] |(0,0)>
  const auto f = ExactState::indicator(Weight({0}));
  const auto g = beta_star(half, 0, f);
  CHECK(g.grade() == 2);
  CHECK(g.at(Weight({0, 0})) == q_int(half, 2));
  CHECK(g.support().size() == 1);

  // beta_0 on the vacuum is the zero map
  const auto vac = ExactState::indicator(Weight{});
  CHECK(beta(half, 0, vac).empty());

  // N_1 |(1,1,0)> = q^2 |(1,1,0)>
  const auto h = num_op(half, 1, ExactState::indicator(Weight({1, 1, 0})));
  CHECK(h.at(Weight({1, 1, 0})) == Rational(1, 4));

  // pullback identities defining the representation
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const int n = checks::rand_int(rng, 1, 4);
    const auto x = checks::random_exact_state(rng, n, -3, 3);
    const int l = checks::rand_int(rng, -3, 3);
    const Weight mu = checks::random_dominant(rng, n - 1, -3, 3);
    CHECK(beta(half, l, x).at(mu) == x.at(mu.inserted(l)));
    const Weight nu = checks::random_dominant(rng, n + 1, -3, 3);
    const Rational expect =
        nu.multiplicity(l) > 0
            ? q_int(half, nu.multiplicity(l)) * x.at(nu.deleted(l))
            : Rational(0);
    CHECK(beta_star(half, l, x).at(nu) == expect);
  }
}

TEST_CASE("hopping operators on indicators") {
  // a_0 |(0,0)> = |(1,0)>
  const auto f = ExactState::indicator(Weight({0, 0}));
  const auto af = hop(half, 0, f);
  CHECK(af.at(Weight({1, 0})) == 1);
  CHECK(af.support().size() == 1);

  // a*_0 |(1,0)> = [2] |(0,0)>
  const auto g = hop_star(half, 0, ExactState::indicator(Weight({1, 0})));
  CHECK(g.at(Weight({0, 0})) == q_int(half, 2));
  CHECK(g.support().size() == 1);

  // no particle at site 5
  CHECK(hop(half, 5, f).empty());

  // grade preserved
  CHECK(af.grade() == 2);
}

TEST_CASE("delta_n and the weighted inner product") {
  CHECK(delta_n(half, Weight({3, 1, 0})) == 1);
  CHECK(delta_n(half, Weight({0, 0})) == Rational(2, 3));  // 1/(1+q)
  CHECK(delta_n(half, Weight({2, 2, 2})) == Rational(8, 21));  // 1/[3]!

  const auto f = ExactState::indicator(Weight({0, 0}));
  CHECK(inner_product(half, f, f) == Rational(2, 3));
  const auto g = ExactState::indicator(Weight({1, 0}));
  const auto h = ExactState::indicator(Weight({2, 0}));
  CHECK(inner_product(half, g, h) == 0);
  const auto k = ExactState::indicator(Weight({3, 1, 0}));
  CHECK(inner_product(half, k, k) == 1);
  CHECK_THROWS_AS(inner_product(half, f, k), std::invalid_argument);

  // float mode conjugates the second argument
  FloatCtx fc(0.5);
  ComplexState u(1), v(1);
  u.add(Weight({0}), Complex(0, 1));
  v.add(Weight({0}), Complex(0, 1));
  CHECK(inner_product(fc, u, v).real() == doctest::Approx(1.0));
}

TEST_CASE("algebra relation suites pass exactly") {
  checks::Config cfg;
  cfg.trials = 25;
  for (const auto& res :
       {checks::check_algebra_relations(half, cfg),
        checks::check_plactic_relations(half, cfg),
        checks::check_representation_adjointness(half, cfg),
        checks::check_norm_bounds(half, cfg)}) {
    INFO(res.name, ": ", res.witness);
    CHECK(res.failures == 0);
    CHECK(res.cases > 0);
  }
  // a second q exercises different denominators
  const ExactCtx third{Rational(1, 3)};
  cfg.trials = 10;
  CHECK(checks::check_algebra_relations(third, cfg).failures == 0);
  CHECK(checks::check_plactic_relations(third, cfg).failures == 0);
}

TEST_CASE("state serialization round trip") {
  std::mt19937_64 rng(5);
  const auto f = checks::random_complex_state(rng, 3, -3, 3, 5);
  const Json j = to_json(f);
  const auto g = complex_state_from_json(j, 3);
  CHECK(max_abs_diff(f, g) == 0.0);

  const auto ex = checks::random_exact_state(rng, 2, -2, 2, 3);
  const Json je = to_json(ex);
  for (const auto& rec : je) {
    CHECK(rec.contains("num"));
    CHECK(rec.contains("den"));
  }
}
