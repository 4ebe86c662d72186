#ifndef QBOSON_WEIGHT_HPP
#define QBOSON_WEIGHT_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qboson {

// A dominant weight: a non-increasing integer vector (lambda_1,...,lambda_n).
// Parts may be negative; n = 0 labels the vacuum. Only the sorted
// representative of an unordered particle configuration is ever stored.
class Weight {
 public:
  Weight() = default;

  explicit Weight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!is_dominant(parts_))
      throw std::invalid_argument("Weight: parts must be non-increasing");
  }

  static Weight sorted_from(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Weight(std::move(parts));
  }

  static bool is_dominant(const std::vector<int>& v) {
    for (size_t j = 1; j < v.size(); ++j)
      if (v[j - 1] < v[j]) return false;
    return true;
  }

  int size() const { return static_cast<int>(parts_.size()); }
  int operator[](int j) const { return parts_[j]; }
  const std::vector<int>& parts() const { return parts_; }

  // number of parts equal to level
  int multiplicity(int level) const {
    int c = 0;
    for (int p : parts_)
      if (p == level) ++c;
    return c;
  }

  // sorted insertion of one extra part
  Weight inserted(int level) const {
    std::vector<int> v = parts_;
    v.insert(std::upper_bound(v.begin(), v.end(), level, std::greater<int>()),
             level);
    Weight w;
    w.parts_ = std::move(v);
    return w;
  }

  // removal of one part equal to level; requires multiplicity > 0
  Weight deleted(int level) const {
    auto it = std::find(parts_.begin(), parts_.end(), level);
    if (it == parts_.end())
      throw std::invalid_argument("Weight::deleted: no part with value " +
                                  std::to_string(level));
    std::vector<int> v = parts_;
    v.erase(v.begin() + (it - parts_.begin()));
    Weight w;
    w.parts_ = std::move(v);
    return w;
  }

  // lambda + step*e_J for a position bitmask J; returns false when the
  // shifted vector leaves the dominant cone
  bool try_shift(uint32_t mask, int step, Weight* out) const {
    std::vector<int> v = parts_;
    for (int j = 0; j < size(); ++j)
      if (mask & (1u << j)) v[j] += step;
    if (!is_dominant(v)) return false;
    out->parts_ = std::move(v);
    return true;
  }

  Weight shifted_all(int step) const {
    std::vector<int> v = parts_;
    for (int& p : v) p += step;
    Weight w;
    w.parts_ = std::move(v);
    return w;
  }

  int min_part() const { return parts_.empty() ? 0 : parts_.back(); }
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  friend auto operator<=>(const Weight&, const Weight&) = default;

  std::string str() const {
    std::string s = "(";
    for (int j = 0; j < size(); ++j) {
      if (j) s += ",";
      s += std::to_string(parts_[j]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

}  // namespace qboson

#endif
