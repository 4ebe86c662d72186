#ifndef QBOSON_SCALAR_HPP
#define QBOSON_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <stdexcept>
#include <string>

namespace qboson {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Two arithmetic modes share the same operator code: exact rationals at a
// fixed rational q (identities hold without rounding) and complex doubles
// (spectral and quadrature work).

struct ExactCtx {
  using real_t = Rational;
  using value_t = Rational;
  static constexpr bool exact = true;

  Rational q;

  explicit ExactCtx(Rational q_) : q(std::move(q_)) {
    if (!(q > 0 && q < 1))
      throw std::invalid_argument("ExactCtx: q must satisfy 0 < q < 1");
  }
};

struct FloatCtx {
  using real_t = double;
  using value_t = Complex;
  static constexpr bool exact = false;

  double q;
  // absolute tolerance for identity checks in this mode
  static constexpr double tol = 1e-10;

  explicit FloatCtx(double q_) : q(q_) {
    // q = 0 is admitted: it is the impenetrable-boson (phase model) limit
    // used as the reference dynamics in scattering runs.
    if (!(q >= 0 && q < 1))
      throw std::invalid_argument("FloatCtx: q must satisfy 0 <= q < 1");
  }
};

inline Rational conj_value(const Rational& x) { return x; }
inline Complex conj_value(const Complex& x) { return std::conj(x); }

// pruning predicate for StateFn supports
inline bool is_negligible(const Rational& x) { return x == 0; }
inline bool is_negligible(const Complex& x) { return std::abs(x) < 1e-15; }

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string scalar_str(const Rational& x) { return x.str(); }

}  // namespace qboson

#endif
