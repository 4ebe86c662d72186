#ifndef QBOSON_QNUM_HPP
#define QBOSON_QNUM_HPP

#include <stdexcept>
#include <vector>

#include "qboson/scalar.hpp"
#include "qboson/weight.hpp"

namespace qboson {

template <class Ctx>
typename Ctx::real_t q_pow(const Ctx& ctx, long k) {
  typename Ctx::real_t out = 1;
  for (long i = 0; i < k; ++i) out *= ctx.q;
  return out;
}

// [m] = 1 + q + ... + q^{m-1}; [0] = 0
template <class Ctx>
typename Ctx::real_t q_int(const Ctx& ctx, long m) {
  if (m < 0) throw std::invalid_argument("q_int: m must be nonnegative");
  typename Ctx::real_t out = 0, p = 1;
  for (long i = 0; i < m; ++i) {
    out += p;
    p *= ctx.q;
  }
  return out;
}

// [m]! = [m][m-1]...[1]; [0]! = 1
template <class Ctx>
typename Ctx::real_t q_factorial(const Ctx& ctx, long m) {
  if (m < 0) throw std::invalid_argument("q_factorial: m must be nonnegative");
  typename Ctx::real_t out = 1;
  for (long i = 1; i <= m; ++i) out *= q_int(ctx, i);
  return out;
}

// Gaussian binomial [m]! / ([k]! [m-k]!), requires m >= k >= 0
template <class Ctx>
typename Ctx::real_t q_binomial(const Ctx& ctx, long m, long k) {
  if (k < 0 || m < k)
    throw std::invalid_argument("q_binomial: need m >= k >= 0");
  return q_factorial(ctx, m) / (q_factorial(ctx, k) * q_factorial(ctx, m - k));
}

// Poincare polynomial of S_n: sum of q^{length} over the group equals [n]!
template <class Ctx>
typename Ctx::real_t poincare_sym(const Ctx& ctx, int n) {
  if (n < 0) throw std::invalid_argument("poincare_sym: n must be nonnegative");
  return q_factorial(ctx, n);
}

// Poincare polynomial of the stabilizer of a dominant weight: product of
// [m_l]! over the distinct part values l of lambda.
template <class Ctx>
typename Ctx::real_t poincare_stabilizer(const Ctx& ctx, const Weight& lambda) {
  typename Ctx::real_t out = 1;
  int i = 0, n = lambda.size();
  while (i < n) {
    int j = i;
    while (j < n && lambda[j] == lambda[i]) ++j;
    out *= q_factorial(ctx, j - i);
    i = j;
  }
  return out;
}

}  // namespace qboson

#endif
