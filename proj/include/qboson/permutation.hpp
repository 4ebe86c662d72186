#ifndef QBOSON_PERMUTATION_HPP
#define QBOSON_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qboson {

// One-line permutation on {0,...,n-1}. Applied to a vector x it produces
// x_sigma = (x[map[0]], ..., x[map[n-1]]).
struct Perm {
  std::vector<int> map;

  Perm() = default;
  explicit Perm(std::vector<int> m) : map(std::move(m)) {}

  static Perm identity(int n) {
    Perm p;
    p.map.resize(n);
    std::iota(p.map.begin(), p.map.end(), 0);
    return p;
  }

  // order reversal j -> n-1-j
  static Perm reversal(int n) {
    Perm p;
    p.map.resize(n);
    for (int j = 0; j < n; ++j) p.map[j] = n - 1 - j;
    return p;
  }

  int size() const { return static_cast<int>(map.size()); }

  Perm inverse() const {
    Perm p;
    p.map.resize(map.size());
    for (int j = 0; j < size(); ++j) p.map[map[j]] = j;
    return p;
  }

  // composition acting as (this o g): (x_{this})_g = x_{this o g}
  Perm compose(const Perm& g) const {
    Perm p;
    p.map.resize(map.size());
    for (int j = 0; j < size(); ++j) p.map[j] = map[g.map[j]];
    return p;
  }

  // Coxeter length = inversion count of the one-line word
  int length() const {
    int inv = 0;
    for (int j = 0; j < size(); ++j)
      for (int k = j + 1; k < size(); ++k)
        if (map[j] > map[k]) ++inv;
    return inv;
  }

  int sign() const { return length() % 2 ? -1 : 1; }

  template <class T>
  std::vector<T> apply(const std::vector<T>& x) const {
    std::vector<T> out(x.size());
    for (int j = 0; j < size(); ++j) out[j] = x[map[j]];
    return out;
  }

  bool operator==(const Perm& o) const = default;
};

inline std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = Perm::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.map.begin(), p.map.end()));
  return out;
}

}  // namespace qboson

#endif
