#ifndef QBOSON_HAMILTONIANS_HPP
#define QBOSON_HAMILTONIANS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "qboson/fock.hpp"

namespace qboson {

// Direction of a hierarchy operator: `lower` is the annihilation-built H_r
// whose action reads values of f at lambda - e_J, `raise` is the
// creation-built H_r^* reading f at lambda + e_J.
enum class Dir { lower, raise };

// all partitions of r (non-increasing positive parts), each exactly once
inline std::vector<std::vector<int>> partitions_of(int r) {
  if (r < 1) throw std::invalid_argument("partitions_of: r must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, left - k, k);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

// bitmasks over n positions with exactly r bits set, ascending
inline std::vector<uint32_t> subsets_of_size(int n, int r) {
  std::vector<uint32_t> out;
  for (uint32_t m = 0; m < (1u << n); ++m)
    if (std::popcount(m) == r) out.push_back(m);
  return out;
}

namespace detail {

template <class Ctx>
StateFn<typename Ctx::value_t> hop_power(const Ctx& ctx, int site, int power,
                                         const StateFn<typename Ctx::value_t>& f,
                                         Dir dir) {
  auto g = f;
  for (int i = 0; i < power && !g.empty(); ++i)
    g = dir == Dir::lower ? hop(ctx, site, g) : hop_star(ctx, site, g);
  return g;
}

}  // namespace detail

// The hopping monomial attached to a partition eta = (eta_1 >= ... >= eta_p):
// a sum over all distinct reorderings of eta's parts and over strictly
// monotone p-tuples of sites (increasing for the annihilation side,
// decreasing for the creation side) of a_{l_1}^{m_1} ... a_{l_p}^{m_p}.
// The site sum is infinite but all terms outside the window
// [min support part - |eta| - 1, max support part + |eta| + 1] kill f,
// so the enumeration below is exact. Subtrees are abandoned as soon as an
// intermediate state vanishes.
template <class Ctx>
StateFn<typename Ctx::value_t> monomial_op(
    const Ctx& ctx, const std::vector<int>& eta,
    const StateFn<typename Ctx::value_t>& f, Dir dir) {
  using V = typename Ctx::value_t;
  StateFn<V> out(f.grade());
  if (f.empty()) return out;

  int total = 0;
  for (int e : eta) total += e;
  int wlo = f.support().begin()->first.min_part();
  int whi = f.support().begin()->first.max_part();
  for (const auto& [w, v] : f.support()) {
    wlo = std::min(wlo, w.min_part());
    whi = std::max(whi, w.max_part());
  }
  wlo -= total + 1;
  whi += total + 1;

  const int p = static_cast<int>(eta.size());

  // rightmost factor applies first; earlier factors are constrained by the
  // monotonicity of the site tuple
  auto rec = [&](auto&& self, int idx, int bound,
                 const std::vector<int>& powers, const StateFn<V>& g) -> void {
    if (idx < 0) {
      out += g;
      return;
    }
    int lo = wlo, hi = whi;
    if (idx < p - 1) {
      if (dir == Dir::lower)
        hi = bound - 1;  // l_idx < l_{idx+1}
      else
        lo = bound + 1;  // l_idx > l_{idx+1}
    }
    for (int site = lo; site <= hi; ++site) {
      auto h = detail::hop_power(ctx, site, powers[idx], g, dir);
      if (!h.empty()) self(self, idx - 1, site, powers, h);
    }
  };

  // distinct reorderings of eta (multiset permutations)
  std::vector<int> powers = eta;
  std::sort(powers.begin(), powers.end());
  do {
    rec(rec, p - 1, 0, powers, f);
  } while (std::next_permutation(powers.begin(), powers.end()));
  return out;
}

// Definitional hierarchy operator: H_r (or H_r^*) as the partition sum of
// hopping monomials m_eta / [eta]!. This is the brute-force oracle against
// which the closed-form action is checked.
template <class Ctx>
StateFn<typename Ctx::value_t> h_def(const Ctx& ctx, int r,
                                     const StateFn<typename Ctx::value_t>& f,
                                     Dir dir) {
  using V = typename Ctx::value_t;
  StateFn<V> out(f.grade());
  for (const auto& eta : partitions_of(r)) {
    typename Ctx::real_t eta_fact = 1;
    for (int e : eta) eta_fact *= q_factorial(ctx, e);
    auto term = monomial_op(ctx, eta, f, dir);
    term *= V(typename Ctx::real_t(1) / eta_fact);
    out += term;
  }
  return out;
}

// V_{lambda,J}: product over pairs j < k with j in J, k outside J and
// lambda_j = lambda_k of (1 - q^{k-j+1}) / (1 - q^{k-j}).
template <class Ctx>
typename Ctx::real_t v_coeff(const Ctx& ctx, const Weight& lambda,
                             uint32_t mask) {
  typename Ctx::real_t out = 1;
  const int n = lambda.size();
  for (int j = 0; j < n; ++j) {
    if (!(mask & (1u << j))) continue;
    for (int k = j + 1; k < n; ++k) {
      if (mask & (1u << k)) continue;
      if (lambda[j] != lambda[k]) continue;
      out *= (typename Ctx::real_t(1) - q_pow(ctx, k - j + 1)) /
             (typename Ctx::real_t(1) - q_pow(ctx, k - j));
    }
  }
  return out;
}

// q-binomial form of the same coefficient, valid when lambda + e_J stays
// dominant: prod over part values l of [m_l(lambda) choose m_{l,J}(lambda)].
template <class Ctx>
typename Ctx::real_t v_coeff_binomial(const Ctx& ctx, const Weight& lambda,
                                      uint32_t mask) {
  typename Ctx::real_t out = 1;
  const int n = lambda.size();
  int i = 0;
  while (i < n) {
    int j = i, in_j = 0;
    while (j < n && lambda[j] == lambda[i]) {
      if (mask & (1u << j)) ++in_j;
      ++j;
    }
    out *= q_binomial(ctx, j - i, in_j);
    i = j;
  }
  return out;
}

// Closed-form action of the hierarchy on a finitely supported state:
//   (H_r f)(lambda)   = sum_{|J|=r, lambda-e_J dominant} V_{lambda,J^c} f(lambda-e_J)
//   (H_r^* f)(lambda) = sum_{|J|=r, lambda+e_J dominant} V_{lambda,J}   f(lambda+e_J)
// For r > n the grade-n subspace is annihilated.
template <class Ctx>
StateFn<typename Ctx::value_t> h_explicit(
    const Ctx& ctx, int r, const StateFn<typename Ctx::value_t>& f, Dir dir) {
  using V = typename Ctx::value_t;
  if (r < 1) throw std::invalid_argument("h_explicit: r must be >= 1");
  const int n = f.grade();
  StateFn<V> out(n);
  if (r > n) return out;
  const uint32_t full = (1u << n) - 1;
  const auto masks = subsets_of_size(n, r);
  for (const auto& [mu, v] : f.support()) {
    for (uint32_t mask : masks) {
      Weight lam;
      if (dir == Dir::lower) {
        if (mu.try_shift(mask, +1, &lam))
          out.add(lam, V(v_coeff(ctx, lam, full & ~mask)) * v);
      } else {
        if (mu.try_shift(mask, -1, &lam))
          out.add(lam, V(v_coeff(ctx, lam, mask)) * v);
      }
    }
  }
  return out;
}

// q-boson Hamiltonian on grade n, evaluated from its explicit action
//   (H_q f)(lambda) = sum_{j, eps=+-1, lambda+eps*e_j dominant}
//                       [m_{lambda_j}(lambda)] f(lambda + eps e_j).
// Coincides with h_explicit(1, lower) + h_explicit(1, raise).
template <class Ctx>
StateFn<typename Ctx::value_t> hq(const Ctx& ctx,
                                  const StateFn<typename Ctx::value_t>& f) {
  using V = typename Ctx::value_t;
  const int n = f.grade();
  StateFn<V> out(n);
  std::set<Weight> candidates;
  for (const auto& [mu, v] : f.support()) {
    for (int j = 0; j < n; ++j) {
      for (int step : {+1, -1}) {
        Weight lam;
        if (mu.try_shift(1u << j, step, &lam)) candidates.insert(lam);
      }
    }
  }
  for (const Weight& lam : candidates) {
    V acc(0);
    bool any = false;
    for (int j = 0; j < n; ++j) {
      for (int step : {+1, -1}) {
        Weight shifted;
        if (!lam.try_shift(1u << j, step, &shifted)) continue;
        auto fv = f.at(shifted);
        if (is_negligible(fv)) continue;
        acc += V(q_int(ctx, lam.multiplicity(lam[j]))) * fv;
        any = true;
      }
    }
    if (any) out.add(lam, acc);
  }
  return out;
}

// m-fold creation hop (a_l^*)^m in closed form: on an indicator |mu> it
// produces [m]! [m_l(mu)+m choose m] on the weight with m parts moved from
// l+1 down to l, provided mu has at least m parts at l+1. Fast path and
// cross-check for iterated hop_star.
template <class Ctx>
StateFn<typename Ctx::value_t> creation_power(
    const Ctx& ctx, int site, int m, const StateFn<typename Ctx::value_t>& f) {
  using V = typename Ctx::value_t;
  if (m < 0) throw std::invalid_argument("creation_power: m must be >= 0");
  if (m == 0) return f;
  StateFn<V> out(f.grade());
  const auto mf = q_factorial(ctx, m);
  for (const auto& [mu, v] : f.support()) {
    if (mu.multiplicity(site + 1) < m) continue;
    Weight lam = mu;
    for (int i = 0; i < m; ++i) lam = lam.deleted(site + 1).inserted(site);
    out.add(lam,
            V(mf * q_binomial(ctx, mu.multiplicity(site) + m, m)) * v);
  }
  return out;
}

// Gauge-transformed hierarchy delta_n^{1/2} (H_r + H_r^*) delta_n^{-1/2} in
// flat l^2; its matrix on any finite support set is real symmetric.
inline ComplexState h_tilde(const FloatCtx& ctx, int r, const ComplexState& f) {
  if (r < 1) throw std::invalid_argument("h_tilde: r must be >= 1");
  const int n = f.grade();
  ComplexState out(n);
  if (r > n) return out;
  const uint32_t full = (1u << n) - 1;
  const auto masks = subsets_of_size(n, r);
  for (const auto& [mu, v] : f.support()) {
    for (uint32_t mask : masks) {
      Weight lam;
      // term reading f(lambda + e_J): lambda = mu - e_J
      if (mu.try_shift(mask, -1, &lam)) {
        double c = std::sqrt(v_coeff(ctx, lam, mask) *
                             v_coeff(ctx, mu, full & ~mask));
        out.add(lam, c * v);
      }
      // term reading f(lambda - e_J): lambda = mu + e_J
      if (mu.try_shift(mask, +1, &lam)) {
        double c = std::sqrt(v_coeff(ctx, lam, full & ~mask) *
                             v_coeff(ctx, mu, mask));
        out.add(lam, c * v);
      }
    }
  }
  return out;
}

}  // namespace qboson

#endif
