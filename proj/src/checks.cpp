#include "qboson/checks.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qboson/hall_littlewood.hpp"

namespace qboson::checks {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string mask_str(uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int j = 0; j < n; ++j)
    if (mask & (1u << j)) {
      if (!first) s += ",";
      s += std::to_string(j + 1);
      first = false;
    }
  return s + "}";
}

void record_failure(Result* res, const std::string& witness) {
  ++res->failures;
  if (res->witness.empty()) res->witness = witness;
}

using ExactOp = std::function<ExactState(const ExactState&)>;

void expect_equal(Result* res, const ExactState& a, const ExactState& b,
                  const std::string& what) {
  ++res->cases;
  if (!(a == b)) record_failure(res, what);
}

ExactState operator*(const Rational& c, ExactState f) {
  f *= c;
  return f;
}

}  // namespace

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

double rand_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (rng() >> 11) * 0x1.0p-53;
}

Weight random_dominant(std::mt19937_64& rng, int n, int lo, int hi) {
  std::vector<int> parts(n);
  for (int& p : parts) p = rand_int(rng, lo, hi);
  return Weight::sorted_from(std::move(parts));
}

ExactState random_exact_state(std::mt19937_64& rng, int n, int lo, int hi,
                              int support_size) {
  ExactState f(n);
  for (int i = 0; i < support_size; ++i) {
    // dyadic values keep denominators small under composition
    Rational v(rand_int(rng, -9, 9), 1 << rand_int(rng, 0, 3));
    if (v == 0) v = 1;
    f.add(random_dominant(rng, n, lo, hi), v);
  }
  return f;
}

ComplexState random_complex_state(std::mt19937_64& rng, int n, int lo, int hi,
                                  int support_size) {
  ComplexState f(n);
  for (int i = 0; i < support_size; ++i)
    f.add(random_dominant(rng, n, lo, hi),
          Complex(rand_uniform(rng, -1, 1), rand_uniform(rng, -1, 1)));
  return f;
}

Vec random_spectral_point(std::mt19937_64& rng, int n, double min_gap) {
  constexpr double pi = std::numbers::pi;
  for (;;) {
    Vec xi(n);
    for (double& x : xi) x = rand_uniform(rng, -pi + min_gap, pi - min_gap);
    std::sort(xi.begin(), xi.end(), std::greater<double>());
    if (in_alcove(xi, min_gap)) return xi;
  }
}

Result check_algebra_relations(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "algebra-relations";
  std::mt19937_64 rng(cfg.seed);
  const Rational& q = ctx.q;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 0, cfg.n_max);
    const ExactState f =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    const int l = rand_int(rng, cfg.site_lo, cfg.site_hi);
    int k = l;
    while (k == l) k = rand_int(rng, cfg.site_lo, cfg.site_hi);
    const std::string at = " at l=" + std::to_string(l) +
                           " k=" + std::to_string(k) + " n=" +
                           std::to_string(n);

    auto B = [&](int s, const ExactState& g) { return beta(ctx, s, g); };
    auto Bs = [&](int s, const ExactState& g) { return beta_star(ctx, s, g); };
    auto N = [&](int s, const ExactState& g) { return num_op(ctx, s, g); };

    // distinct sites: everything commutes
    expect_equal(&res, B(l, B(k, f)), B(k, B(l, f)), "[beta_l,beta_k]" + at);
    expect_equal(&res, Bs(l, Bs(k, f)), Bs(k, Bs(l, f)),
                 "[beta*_l,beta*_k]" + at);
    expect_equal(&res, N(l, N(k, f)), N(k, N(l, f)), "[N_l,N_k]" + at);
    expect_equal(&res, N(l, B(k, f)), B(k, N(l, f)), "[N_l,beta_k]" + at);
    expect_equal(&res, N(l, Bs(k, f)), Bs(k, N(l, f)), "[N_l,beta*_k]" + at);
    expect_equal(&res, B(l, Bs(k, f)), Bs(k, B(l, f)), "[beta_l,beta*_k]" + at);

    // same site: the deformed oscillator relations
    expect_equal(&res, N(l, Bs(l, f)), q * Bs(l, N(l, f)),
                 "N beta* = q beta* N" + at);
    expect_equal(&res, B(l, N(l, f)), q * N(l, B(l, f)),
                 "beta N = q N beta" + at);
    {
      ExactState lhs = B(l, Bs(l, f)) - Bs(l, B(l, f));
      expect_equal(&res, lhs, N(l, f), "[beta,beta*] = N" + at);
    }
    {
      ExactState lhs = B(l, Bs(l, f)) - q * Bs(l, B(l, f));
      expect_equal(&res, lhs, f, "beta beta* - q beta* beta = 1" + at);
    }
  }
  return res;
}

Result check_plactic_relations(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "plactic-relations";
  std::mt19937_64 rng(cfg.seed + 1);
  const Rational& q = ctx.q;
  const Rational one_plus_q = 1 + q;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 0, cfg.n_max);
    const ExactState f =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    const int l = rand_int(rng, cfg.site_lo, cfg.site_hi - 1);
    int k = l;
    while (std::abs(k - l) <= 1) k = rand_int(rng, cfg.site_lo, cfg.site_hi);
    const std::string at =
        " at l=" + std::to_string(l) + " k=" + std::to_string(k);

    auto A = [&](int s, const ExactState& g) { return hop(ctx, s, g); };
    auto As = [&](int s, const ExactState& g) { return hop_star(ctx, s, g); };

    // nonlocal commutativity
    expect_equal(&res, A(l, A(k, f)), A(k, A(l, f)), "a_l a_k = a_k a_l" + at);
    expect_equal(&res, As(l, As(k, f)), As(k, As(l, f)),
                 "a*_l a*_k = a*_k a*_l" + at);

    // quantum Knuth relations for the hopping operators
    {
      ExactState lhs = A(l + 1, A(l, A(l, f))) + q * A(l, A(l, A(l + 1, f)));
      ExactState rhs = one_plus_q * A(l, A(l + 1, A(l, f)));
      expect_equal(&res, lhs, rhs, "a_{l+1} a_l^2 relation" + at);
    }
    {
      ExactState lhs =
          A(l + 1, A(l + 1, A(l, f))) + q * A(l, A(l + 1, A(l + 1, f)));
      ExactState rhs = one_plus_q * A(l + 1, A(l, A(l + 1, f)));
      expect_equal(&res, lhs, rhs, "a_{l+1}^2 a_l relation" + at);
    }
    // mirrored (reversely ordered) relations for the starred operators
    {
      ExactState lhs =
          As(l, As(l, As(l + 1, f))) + q * As(l + 1, As(l, As(l, f)));
      ExactState rhs = one_plus_q * As(l, As(l + 1, As(l, f)));
      expect_equal(&res, lhs, rhs, "a*_l^2 a*_{l+1} relation" + at);
    }
    {
      ExactState lhs =
          As(l, As(l + 1, As(l + 1, f))) + q * As(l + 1, As(l + 1, As(l, f)));
      ExactState rhs = one_plus_q * As(l + 1, As(l, As(l + 1, f)));
      expect_equal(&res, lhs, rhs, "a*_{l+1}^2 a*_l relation" + at);
    }
  }
  return res;
}

Result check_representation_adjointness(const ExactCtx& ctx,
                                        const Config& cfg) {
  Result res;
  res.name = "representation-adjointness";
  std::mt19937_64 rng(cfg.seed + 2);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 0, cfg.n_max - 1);
    const ExactState f =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    const ExactState g =
        random_exact_state(rng, n + 1, cfg.site_lo, cfg.site_hi);
    const ExactState h =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    const int l = rand_int(rng, cfg.site_lo, cfg.site_hi);

    ++res.cases;
    if (inner_product(ctx, beta_star(ctx, l, f), g) !=
        inner_product(ctx, f, beta(ctx, l, g)))
      record_failure(&res, "<beta* f, g> != <f, beta g> at l=" +
                               std::to_string(l));
    ++res.cases;
    if (inner_product(ctx, num_op(ctx, l, f), h) !=
        inner_product(ctx, f, num_op(ctx, l, h)))
      record_failure(&res,
                     "<N f, h> != <f, N h> at l=" + std::to_string(l));
  }
  return res;
}

Result check_norm_bounds(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "norm-bounds";
  std::mt19937_64 rng(cfg.seed + 3);
  const Rational bound = Rational(1) / (1 - ctx.q);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 1, cfg.n_max);
    const ExactState f =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    const int l = rand_int(rng, cfg.site_lo, cfg.site_hi);
    const Rational ff = inner_product(ctx, f, f);

    auto check = [&](const ExactState& g, const Rational& cap,
                     const char* what) {
      ++res.cases;
      if (inner_product(ctx, g, g) > cap * ff)
        record_failure(&res, std::string(what) + " bound violated at l=" +
                                 std::to_string(l));
    };
    check(beta(ctx, l, f), bound, "beta");
    check(beta_star(ctx, l, f), bound, "beta*");
    check(num_op(ctx, l, f), 1, "N");
  }
  return res;
}

namespace {

// closed-form action with an injectable V coefficient (fault hook)
template <class VFun>
ExactState h_explicit_with(const ExactCtx&, int r, const ExactState& f,
                           Dir dir, VFun&& vfun) {
  const int n = f.grade();
  ExactState out(n);
  if (r > n) return out;
  const uint32_t full = (1u << n) - 1;
  const auto masks = subsets_of_size(n, r);
  for (const auto& [mu, v] : f.support()) {
    for (uint32_t mask : masks) {
      Weight lam;
      if (dir == Dir::lower) {
        if (mu.try_shift(mask, +1, &lam))
          out.add(lam, vfun(lam, full & ~mask) * v);
      } else {
        if (mu.try_shift(mask, -1, &lam)) out.add(lam, vfun(lam, mask) * v);
      }
    }
  }
  return out;
}

}  // namespace

Result check_oracle_equivalence(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "oracle-equivalence";
  std::mt19937_64 rng(cfg.seed + 4);
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int trial = 0; trial < cfg.trials; ++trial) {
        const ExactState f =
            random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
        for (Dir dir : {Dir::lower, Dir::raise}) {
          const ExactState oracle = h_def(ctx, r, f, dir);
          ExactState closed(0);
          if (cfg.corrupt_v) {
            // corrupt V on the lexicographically first admissible move set
            const uint32_t bad = subsets_of_size(n, r).front();
            closed = h_explicit_with(
                ctx, r, f, dir, [&](const Weight& lam, uint32_t mask) {
                  Rational v = v_coeff(ctx, lam, mask);
                  if (mask == bad) v *= 1 + ctx.q;
                  return v;
                });
          } else {
            closed = h_explicit(ctx, r, f, dir);
          }
          ++res.cases;
          if (!(oracle == closed)) {
            // witness: the first weight where the two actions differ, with
            // the move sets contributing to it
            Weight bad_lam;
            for (const auto& [w, v] : oracle.support())
              if (!(closed.at(w) == v)) {
                bad_lam = w;
                break;
              }
            if (bad_lam.size() == 0 && !closed.support().empty())
              bad_lam = closed.support().begin()->first;
            std::ostringstream os;
            os << "n=" << n << " r=" << r
               << " dir=" << (dir == Dir::lower ? "lower" : "raise")
               << " lambda=" << bad_lam.str() << " J in {";
            for (uint32_t mask : subsets_of_size(n, r)) {
              Weight shifted;
              if (bad_lam.try_shift(mask, dir == Dir::lower ? -1 : +1,
                                    &shifted))
                os << mask_str(mask, n);
            }
            os << "}";
            record_failure(&res, os.str());
          }
        }
      }
    }
  }
  return res;
}

Result check_commutativity(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "hierarchy-commutativity";
  std::mt19937_64 rng(cfg.seed + 5);
  const int trials = std::min(cfg.trials, 20);
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int trial = 0; trial < trials; ++trial) {
      const ExactState f =
          random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
      for (int r = 1; r <= n; ++r) {
        for (int rp = r; rp <= n; ++rp) {
          auto Hr = [&](const ExactState& g, Dir d) {
            return h_explicit(ctx, r, g, d);
          };
          auto Hrp = [&](const ExactState& g, Dir d) {
            return h_explicit(ctx, rp, g, d);
          };
          expect_equal(&res, Hr(Hrp(f, Dir::lower), Dir::lower),
                       Hrp(Hr(f, Dir::lower), Dir::lower),
                       "[H_r,H_r'] n=" + std::to_string(n));
          expect_equal(&res, Hr(Hrp(f, Dir::raise), Dir::raise),
                       Hrp(Hr(f, Dir::raise), Dir::raise),
                       "[H*_r,H*_r'] n=" + std::to_string(n));
          expect_equal(&res, Hr(Hrp(f, Dir::raise), Dir::lower),
                       Hrp(Hr(f, Dir::lower), Dir::raise),
                       "[H_r,H*_r'] n=" + std::to_string(n));
          if (rp != r)
            expect_equal(&res, Hrp(Hr(f, Dir::raise), Dir::lower),
                         Hr(Hrp(f, Dir::lower), Dir::raise),
                         "[H_r',H*_r] n=" + std::to_string(n));
        }
      }
    }
  }
  return res;
}

Result check_hierarchy_adjointness(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "hierarchy-adjointness";
  std::mt19937_64 rng(cfg.seed + 6);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 1, cfg.n_max);
    const int r = rand_int(rng, 1, n);
    const ExactState f =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    const ExactState g =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    ++res.cases;
    if (inner_product(ctx, h_explicit(ctx, r, f, Dir::lower), g) !=
        inner_product(ctx, f, h_explicit(ctx, r, g, Dir::raise)))
      record_failure(&res, "<H_r f, g> != <f, H*_r g> at n=" +
                               std::to_string(n) + " r=" + std::to_string(r));
  }
  return res;
}

Result check_kernel_translation(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "kernel-and-translation";
  std::mt19937_64 rng(cfg.seed + 7);
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const ExactState f =
          random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
      for (int r = n + 1; r <= n + 2; ++r) {
        for (Dir dir : {Dir::lower, Dir::raise}) {
          ++res.cases;
          if (!h_explicit(ctx, r, f, dir).empty() ||
              !h_def(ctx, r, f, dir).empty())
            record_failure(&res, "kernel violated at n=" + std::to_string(n) +
                                     " r=" + std::to_string(r));
        }
      }
      // (H_n f)(lambda) = f(lambda - (1,...,1))
      ExactState translated(n);
      for (const auto& [w, v] : f.support())
        translated.add(w.shifted_all(+1), v);
      expect_equal(&res, h_explicit(ctx, n, f, Dir::lower), translated,
                   "H_n translation at n=" + std::to_string(n));
    }
  }
  return res;
}

Result check_raise_from_lower(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "raise-equals-lower-shift";
  std::mt19937_64 rng(cfg.seed + 8);
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int r = 1; r <= n; ++r) {
      for (int trial = 0; trial < 10; ++trial) {
        const ExactState f =
            random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
        // (H*_r f)(lambda) = (H_{n-r} f)(lambda + (1,...,1))
        const ExactState lhs = h_explicit(ctx, r, f, Dir::raise);
        ExactState g =
            r == n ? f : h_explicit(ctx, n - r, f, Dir::lower);
        ExactState rhs(n);
        for (const auto& [w, v] : g.support())
          rhs.add(w.shifted_all(-1), v);
        expect_equal(&res, lhs, rhs,
                     "H*_r vs H_{n-r} shift at n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
      }
    }
  }
  return res;
}

Result check_gauge_identity(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "gauge-identity";
  std::mt19937_64 rng(cfg.seed + 9);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 1, cfg.n_max);
    const Weight lam = random_dominant(rng, n, cfg.site_lo, cfg.site_hi);
    const uint32_t full = (1u << n) - 1;
    for (uint32_t mask = 1; mask <= full; ++mask) {
      Weight shifted;
      if (!lam.try_shift(mask, -1, &shifted)) continue;
      ++res.cases;
      if (delta_n(ctx, shifted) * v_coeff(ctx, shifted, mask) !=
          delta_n(ctx, lam) * v_coeff(ctx, lam, full & ~mask))
        record_failure(&res, "gauge identity at lambda=" + lam.str() +
                                 " J=" + mask_str(mask, n));
    }
  }
  return res;
}

Result check_v_binomial_form(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "v-binomial-form";
  std::mt19937_64 rng(cfg.seed + 10);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 1, cfg.n_max);
    const Weight lam = random_dominant(rng, n, cfg.site_lo, cfg.site_hi);
    const uint32_t full = (1u << n) - 1;
    for (uint32_t mask = 0; mask <= full; ++mask) {
      Weight shifted;
      if (!lam.try_shift(mask, +1, &shifted)) continue;
      ++res.cases;
      if (v_coeff(ctx, lam, mask) != v_coeff_binomial(ctx, lam, mask))
        record_failure(&res, "V forms differ at lambda=" + lam.str() +
                                 " J=" + mask_str(mask, n));
    }
  }
  return res;
}

Result check_hq_and_creation_power(const ExactCtx& ctx, const Config& cfg) {
  Result res;
  res.name = "hq-and-creation-power";
  std::mt19937_64 rng(cfg.seed + 11);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const int n = rand_int(rng, 1, cfg.n_max);
    const ExactState f =
        random_exact_state(rng, n, cfg.site_lo, cfg.site_hi);
    expect_equal(&res, hq(ctx, f),
                 h_explicit(ctx, 1, f, Dir::lower) +
                     h_explicit(ctx, 1, f, Dir::raise),
                 "H_q != H_1 + H*_1 at n=" + std::to_string(n));

    const int l = rand_int(rng, cfg.site_lo, cfg.site_hi - 1);
    const int m = rand_int(rng, 1, 3);
    ExactState iterated = f;
    for (int i = 0; i < m; ++i) iterated = hop_star(ctx, l, iterated);
    expect_equal(&res, creation_power(ctx, l, m, f), iterated,
                 "creation power vs iterated hops at l=" + std::to_string(l) +
                     " m=" + std::to_string(m));
  }
  return res;
}

Result check_eigenvalue_identities(const FloatCtx& ctx, const Config& cfg,
                                   double tol) {
  Result res;
  res.name = "eigenvalue-identities";
  std::mt19937_64 rng(cfg.seed + 12);
  const int n_points = std::min(cfg.trials, 20);
  for (int n = 1; n <= cfg.n_max; ++n) {
    const uint32_t full = (1u << n) - 1;
    for (int p = 0; p < n_points; ++p) {
      const Vec xi = random_spectral_point(rng, n);
      std::vector<Complex> zp(n), zm(n);
      for (int j = 0; j < n; ++j) {
        zp[j] = std::exp(kI * xi[j]);
        zm[j] = std::conj(zp[j]);
      }
      for (int lam_case = 0; lam_case < 10; ++lam_case) {
        // alternate between generic weights and ones with forced repeats
        Weight lam = random_dominant(rng, n, cfg.site_lo, cfg.site_hi);
        if (lam_case % 2 == 1 && n >= 2) {
          auto parts = lam.parts();
          parts[rand_int(rng, 1, n - 1)] = parts[0];
          lam = Weight::sorted_from(std::move(parts));
        }
        const Complex phi0 = hl_phi(ctx, xi, lam);
        const double scale = 1.0 + std::abs(phi0);

        for (int r = 1; r <= n; ++r) {
          Complex lower{0.0, 0.0}, raise{0.0, 0.0};
          for (uint32_t mask : subsets_of_size(n, r)) {
            Weight shifted;
            if (lam.try_shift(mask, -1, &shifted))
              lower += v_coeff(ctx, lam, full & ~mask) *
                       hl_phi(ctx, xi, shifted);
            if (lam.try_shift(mask, +1, &shifted))
              raise += v_coeff(ctx, lam, mask) * hl_phi(ctx, xi, shifted);
          }
          const double res_lower =
              std::abs(lower - elementary_symmetric(r, zm) * phi0) / scale;
          const double res_raise =
              std::abs(raise - elementary_symmetric(r, zp) * phi0) / scale;
          res.cases += 2;
          res.max_residual =
              std::max({res.max_residual, res_lower, res_raise});
          if (res_lower > tol)
            record_failure(&res, "lower identity at n=" + std::to_string(n) +
                                     " r=" + std::to_string(r) +
                                     " lambda=" + lam.str());
          if (res_raise > tol)
            record_failure(&res, "raise identity at n=" + std::to_string(n) +
                                     " r=" + std::to_string(r) +
                                     " lambda=" + lam.str());
        }

        // q-boson energy: 2 sum_j cos xi_j
        Complex hq_val{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
          for (int step : {+1, -1}) {
            Weight shifted;
            if (lam.try_shift(1u << j, step, &shifted))
              hq_val += q_int(ctx, lam.multiplicity(lam[j])) *
                        hl_phi(ctx, xi, shifted);
          }
        }
        double energy = 0;
        for (int j = 0; j < n; ++j) energy += 2.0 * std::cos(xi[j]);
        const double res_hq = std::abs(hq_val - energy * phi0) / scale;
        ++res.cases;
        res.max_residual = std::max(res.max_residual, res_hq);
        if (res_hq > tol)
          record_failure(&res, "H_q eigenvalue at n=" + std::to_string(n) +
                                   " lambda=" + lam.str());
      }
    }
  }
  return res;
}

Result check_two_form_agreement(const FloatCtx& ctx, const Config& cfg,
                                double tol) {
  Result res;
  res.name = "two-form-agreement";
  std::mt19937_64 rng(cfg.seed + 13);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < cfg.trials; ++trial) {
      const Vec xi = random_spectral_point(rng, n);
      const Weight lam = random_dominant(rng, n, cfg.site_lo, cfg.site_hi);
      const Complex a = psi(ctx, xi, lam);
      const Complex b = psi_gauge_form(ctx, xi, lam);
      ++res.cases;
      res.max_residual = std::max(res.max_residual, std::abs(a - b));
      if (std::abs(a - b) > tol)
        record_failure(&res, "two forms differ at n=" + std::to_string(n) +
                                 " lambda=" + lam.str());
    }
  }
  return res;
}

std::vector<Result> run_exact_suite(const ExactCtx& ctx, const Config& cfg) {
  return {check_algebra_relations(ctx, cfg),
          check_plactic_relations(ctx, cfg),
          check_representation_adjointness(ctx, cfg),
          check_norm_bounds(ctx, cfg),
          check_oracle_equivalence(ctx, cfg),
          check_commutativity(ctx, cfg),
          check_hierarchy_adjointness(ctx, cfg),
          check_kernel_translation(ctx, cfg),
          check_raise_from_lower(ctx, cfg),
          check_gauge_identity(ctx, cfg),
          check_v_binomial_form(ctx, cfg),
          check_hq_and_creation_power(ctx, cfg)};
}

std::vector<Result> run_float_suite(const FloatCtx& ctx, const Config& cfg) {
  return {check_eigenvalue_identities(ctx, cfg),
          check_two_form_agreement(ctx, cfg)};
}

}  // namespace qboson::checks
