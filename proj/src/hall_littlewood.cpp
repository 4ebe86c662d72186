#include "qboson/hall_littlewood.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qboson/fock.hpp"

namespace qboson {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double min_pair_gap(const Vec& xi) {
  double gap = std::numeric_limits<double>::infinity();
  for (size_t j = 0; j < xi.size(); ++j)
    for (size_t k = j + 1; k < xi.size(); ++k)
      gap = std::min(gap, std::abs(xi[j] - xi[k]));
  return gap;
}

}  // namespace

bool in_alcove(const Vec& xi, double min_gap) {
  const int n = static_cast<int>(xi.size());
  if (n == 0) return true;
  if (!(xi.front() < kPi - min_gap) || !(xi.back() > -kPi + min_gap))
    return false;
  for (int j = 1; j < n; ++j)
    if (!(xi[j - 1] - xi[j] > min_gap)) return false;
  return true;
}

Vec rho_vector(int n) {
  Vec rho(n);
  for (int k = 0; k < n; ++k) rho[k] = 0.5 * (n - 1) - k;
  return rho;
}

Complex c_function(const FloatCtx& ctx, const Vec& xi) {
  const int n = static_cast<int>(xi.size());
  Complex out{1.0, 0.0};
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Complex z = std::exp(kI * (xi[k] - xi[j]));
      Complex den = 1.0 - z;
      if (std::abs(den) < 1e-12)
        throw std::domain_error("c_function: coinciding spectral components");
      out *= (1.0 - ctx.q * z) / den;
    }
  }
  return out;
}

Complex hl_phi(const FloatCtx& ctx, const Vec& xi, const Weight& lambda) {
  const int n = static_cast<int>(xi.size());
  Vec x = xi;
  if (n > 1 && min_pair_gap(x) < 1e-9) {
    // spread coincident components; phi is real-analytic so the induced
    // error is O(1e-9 * |grad phi|)
    for (int j = 0; j < n; ++j) x[j] += j * 1e-9;
  }
  Complex out{0.0, 0.0};
  for (const Perm& sigma : all_permutations(n)) {
    Vec xs = sigma.apply(x);
    double ph = 0;
    for (int k = 0; k < n; ++k) ph += lambda[k] * xs[k];
    out += c_function(ctx, xs) * std::exp(kI * ph);
  }
  return out;
}

Complex elementary_symmetric(int r, const std::vector<Complex>& x) {
  const int n = static_cast<int>(x.size());
  if (r < 0 || r > n) return {0.0, 0.0};
  // e_k coefficients by multiplying out prod (1 + t x_j)
  std::vector<Complex> e(r + 1, Complex{0.0, 0.0});
  e[0] = 1.0;
  for (int j = 0; j < n; ++j)
    for (int k = std::min(j + 1, r); k >= 1; --k) e[k] += x[j] * e[k - 1];
  return e[r];
}

double epsilon_r(int r, const Vec& xi) {
  const int n = static_cast<int>(xi.size());
  if (r < 1 || r > n)
    throw std::invalid_argument("epsilon_r: need 1 <= r <= n");
  double out = 0;
  // iterate r-subsets by lexicographic index vectors
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    double s = 0;
    for (int i : idx) s += xi[i];
    out += 2.0 * std::cos(s);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double density(const FloatCtx& ctx, const Vec& xi) {
  const int n = static_cast<int>(xi.size());
  double out = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      double th = xi[k] - xi[j];
      double num = 2.0 - 2.0 * std::cos(th);  // |1 - e^{i th}|^2
      double den = 1.0 + ctx.q * ctx.q - 2.0 * ctx.q * std::cos(th);
      out *= num / den;
    }
  }
  return out;
}

Complex s_phase(const FloatCtx& ctx, double x) {
  Complex num = 1.0 - ctx.q * std::exp(kI * x);
  Complex den = 1.0 - ctx.q * std::exp(-kI * x);
  return num / den;
}

Complex s_half(const FloatCtx& ctx, double x) {
  Complex num = 1.0 - ctx.q * std::exp(kI * x);
  return num / std::abs(num);
}

namespace {

template <class F>
Complex s_hat_product(const Perm& sigma, const Vec& xi, F&& factor) {
  const int n = static_cast<int>(xi.size());
  const Perm inv = sigma.inverse();
  Complex out{1.0, 0.0};
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Complex s = factor(xi[k] - xi[j]);
      out *= inv.map[j] < inv.map[k] ? s : std::conj(s);
    }
  return out;
}

}  // namespace

Complex s_hat_sigma(const FloatCtx& ctx, const Perm& sigma, const Vec& xi) {
  return s_hat_product(sigma, xi, [&](double x) { return s_phase(ctx, x); });
}

Complex s_hat_sigma_half(const FloatCtx& ctx, const Perm& sigma,
                         const Vec& xi) {
  return s_hat_product(sigma, xi, [&](double x) { return s_half(ctx, x); });
}

Complex psi(const FloatCtx& ctx, const Vec& xi, const Weight& lambda) {
  const int n = static_cast<int>(xi.size());
  const Vec rho = rho_vector(n);
  Complex out{0.0, 0.0};
  for (const Perm& sigma : all_permutations(n)) {
    Vec xs = sigma.apply(xi);
    double ph = 0;
    for (int k = 0; k < n; ++k) ph += (rho[k] + lambda[k]) * xs[k];
    out += double(sigma.sign()) * s_hat_sigma_half(ctx, sigma, xi) *
           std::exp(kI * ph);
  }
  return std::sqrt(delta_n(ctx, lambda)) * out;
}

Complex psi_gauge_form(const FloatCtx& ctx, const Vec& xi,
                       const Weight& lambda) {
  const int n = static_cast<int>(xi.size());
  static constexpr Complex i_pow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  Complex phase = i_pow[(n * (n - 1) / 2) % 4];
  return phase * std::sqrt(density(ctx, xi)) *
         std::sqrt(delta_n(ctx, lambda)) * hl_phi(ctx, xi, lambda);
}

}  // namespace qboson
