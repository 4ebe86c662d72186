#ifndef QBOSON_STATE_HPP
#define QBOSON_STATE_HPP

#include <map>
#include <stdexcept>

#include "qboson/scalar.hpp"
#include "qboson/weight.hpp"

namespace qboson {

// A finitely supported function on the grade-n dominant weights, the
// computational carrier of all operator actions. Zero coefficients are
// pruned (exactly in rational mode, below 1e-15 in float mode), so supports
// stay finite and comparisons are well defined. Values are immutable from
// the outside; operators return new states.
template <class V>
class StateFn {
 public:
  explicit StateFn(int grade) : grade_(grade) {
    if (grade < 0) throw std::invalid_argument("StateFn: negative grade");
  }

  static StateFn indicator(const Weight& w) {
    StateFn f(w.size());
    f.coef_[w] = V(1);
    return f;
  }

  int grade() const { return grade_; }
  const std::map<Weight, V>& support() const { return coef_; }
  bool empty() const { return coef_.empty(); }

  V at(const Weight& w) const {
    auto it = coef_.find(w);
    return it == coef_.end() ? V(0) : it->second;
  }

  void add(const Weight& w, const V& v) {
    if (w.size() != grade_)
      throw std::invalid_argument("StateFn::add: weight grade mismatch");
    auto [it, fresh] = coef_.try_emplace(w, v);
    if (!fresh) it->second += v;
    if (is_negligible(it->second)) coef_.erase(it);
  }

  StateFn& operator+=(const StateFn& g) {
    if (g.empty()) return *this;
    if (empty()) grade_ = g.grade_;
    require_same_grade(g);
    for (const auto& [w, v] : g.coef_) add(w, v);
    return *this;
  }

  StateFn& operator-=(const StateFn& g) {
    if (g.empty()) return *this;
    if (empty()) grade_ = g.grade_;
    require_same_grade(g);
    for (const auto& [w, v] : g.coef_) add(w, -v);
    return *this;
  }

  template <class S>
  StateFn& operator*=(const S& s) {
    for (auto it = coef_.begin(); it != coef_.end();) {
      it->second = it->second * s;
      it = is_negligible(it->second) ? coef_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend StateFn operator+(StateFn f, const StateFn& g) { return f += g; }
  friend StateFn operator-(StateFn f, const StateFn& g) { return f -= g; }

  // empty states are the zero vector of every grade
  bool operator==(const StateFn& g) const {
    if (empty() && g.empty()) return true;
    return grade_ == g.grade_ && coef_ == g.coef_;
  }

  // largest |f(w) - g(w)| over the union of supports (float mode)
  friend double max_abs_diff(const StateFn& f, const StateFn& g) {
    if (!f.empty() && !g.empty()) f.require_same_grade(g);
    double worst = 0;
    for (const auto& [w, v] : f.coef_)
      worst = std::max(worst, std::abs(v - g.at(w)));
    for (const auto& [w, v] : g.coef_)
      worst = std::max(worst, std::abs(f.at(w) - v));
    return worst;
  }

 private:
  void require_same_grade(const StateFn& g) const {
    if (grade_ != g.grade_)
      throw std::invalid_argument("StateFn: grade mismatch");
  }

  int grade_ = 0;
  std::map<Weight, V> coef_;
};

using ExactState = StateFn<Rational>;
using ComplexState = StateFn<Complex>;

}  // namespace qboson

#endif
