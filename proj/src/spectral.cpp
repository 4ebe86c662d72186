#include "qboson/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qboson/fock.hpp"
#include "qboson/hall_littlewood.hpp"

namespace qboson {

namespace {

constexpr Complex kI{0.0, 1.0};

double factorial(int n) {
  double f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double two_pi_pow(int n) {
  return std::pow(2.0 * std::numbers::pi, n);
}

void require_grade(const QuadratureGrid& grid, int grade) {
  if (grid.dim != grade)
    throw std::invalid_argument("spectral: grid dimension != state grade");
}

}  // namespace

double alcove_factor(const SpectralFn& f) {
  return f.symmetrized ? 1.0 / factorial(f.grid->dim) : 1.0;
}

SpectralFn fourier_forward(const FloatCtx& ctx, const ComplexState& f,
                           std::shared_ptr<const QuadratureGrid> grid) {
  require_grade(*grid, f.grade());
  if (!grid->cube)
    throw std::invalid_argument("fourier_forward: needs a full-cube grid");
  SpectralFn out{grid, true, std::vector<Complex>(grid->size())};
  // precompute the weighted coefficients once
  std::vector<std::pair<Weight, Complex>> terms;
  for (const auto& [w, v] : f.support())
    terms.emplace_back(w, v * delta_n(ctx, w));
  for (size_t i = 0; i < grid->size(); ++i) {
    Complex acc{0.0, 0.0};
    for (const auto& [w, c] : terms)
      acc += c * std::conj(hl_phi(ctx, grid->nodes[i], w));
    out.values[i] = acc;
  }
  return out;
}

ComplexState fourier_inverse(const FloatCtx& ctx, const SpectralFn& fhat,
                             const std::vector<Weight>& support) {
  const auto& grid = *fhat.grid;
  const int n = grid.dim;
  const double scale = alcove_factor(fhat) / two_pi_pow(n);
  ComplexState out(n);
  for (const Weight& lam : support) {
    Complex acc{0.0, 0.0};
    for (size_t i = 0; i < grid.size(); ++i) {
      if (is_negligible(fhat.values[i])) continue;
      const double d = density(ctx, grid.nodes[i]);
      if (d == 0.0) continue;  // alcove wall, the true integrand vanishes
      acc += grid.weights[i] * fhat.values[i] * d *
             hl_phi(ctx, grid.nodes[i], lam);
    }
    out.add(lam, scale * acc);
  }
  return out;
}

Complex verify_orthogonality(const FloatCtx& ctx, const Weight& lambda,
                             const Weight& mu, const QuadratureGrid& grid) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("verify_orthogonality: grade mismatch");
  require_grade(grid, lambda.size());
  const double scale =
      (grid.cube ? 1.0 / factorial(grid.dim) : 1.0) / two_pi_pow(grid.dim);
  Complex acc{0.0, 0.0};
  for (size_t i = 0; i < grid.size(); ++i) {
    const double d = density(ctx, grid.nodes[i]);
    if (d == 0.0) continue;
    acc += grid.weights[i] * d * hl_phi(ctx, grid.nodes[i], lambda) *
           std::conj(hl_phi(ctx, grid.nodes[i], mu));
  }
  return scale * acc;
}

SpectralFn fourier_tilde(const FloatCtx& ctx, const ComplexState& f,
                         std::shared_ptr<const QuadratureGrid> grid) {
  require_grade(*grid, f.grade());
  if (!grid->cube)
    throw std::invalid_argument("fourier_tilde: needs a full-cube grid");
  SpectralFn out{grid, true, std::vector<Complex>(grid->size())};
  for (size_t i = 0; i < grid->size(); ++i) {
    Complex acc{0.0, 0.0};
    for (const auto& [w, v] : f.support())
      acc += v * std::conj(psi(ctx, grid->nodes[i], w));
    out.values[i] = acc;
  }
  return out;
}

ComplexState fourier_tilde_inverse(const FloatCtx& ctx, const SpectralFn& fhat,
                                   const std::vector<Weight>& support) {
  return evolve(ctx, 1, fhat, 0.0, support);
}

ComplexState evolve(const FloatCtx& ctx, int r, const SpectralFn& fhat,
                    double t, const std::vector<Weight>& support) {
  const auto& grid = *fhat.grid;
  const int n = grid.dim;
  if (t != 0.0 && (r < 1 || r > n))
    throw std::invalid_argument("evolve: need 1 <= r <= n");
  const double scale = alcove_factor(fhat) / two_pi_pow(n);

  // fold the weights and the diagonal flow into one kernel per node
  std::vector<Complex> kernel(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    kernel[i] = grid.weights[i] * fhat.values[i];
    if (t != 0.0)
      kernel[i] *= std::exp(kI * (t * epsilon_r(r, grid.nodes[i])));
  }

  // hoist the permutation expansion of the wave function out of the weight
  // loop: psi contributes sign * s_hat_half per (permutation, node), with
  // the phase carried by the permuted node coordinates
  const auto perms = all_permutations(n);
  std::vector<Complex> coeff;          // [perm * nodes + i]
  std::vector<double> permuted;        // [(perm * nodes + i) * n + k]
  coeff.reserve(perms.size() * grid.size());
  permuted.reserve(perms.size() * grid.size() * n);
  for (const Perm& sigma : perms) {
    const double sgn = sigma.sign();
    for (size_t i = 0; i < grid.size(); ++i) {
      coeff.push_back(sgn * s_hat_sigma_half(ctx, sigma, grid.nodes[i]) *
                      kernel[i]);
      for (int k = 0; k < n; ++k)
        permuted.push_back(grid.nodes[i][sigma.map[k]]);
    }
  }

  const Vec rho = rho_vector(n);
  ComplexState out(n);
  std::vector<double> u(n);
  for (const Weight& lam : support) {
    for (int k = 0; k < n; ++k) u[k] = rho[k] + lam[k];
    Complex acc{0.0, 0.0};
    const double* pn = permuted.data();
    for (const Complex& c : coeff) {
      double phase = 0;
      for (int k = 0; k < n; ++k) phase += u[k] * pn[k];
      pn += n;
      acc += c * Complex(std::cos(phase), std::sin(phase));
    }
    out.add(lam, scale * std::sqrt(delta_n(ctx, lam)) * acc);
  }
  return out;
}

SpectralFn apply_multiplier(int r, const SpectralFn& fhat) {
  const auto& grid = *fhat.grid;
  if (r < 1 || r > grid.dim)
    throw std::invalid_argument("apply_multiplier: need 1 <= r <= n");
  SpectralFn out = fhat;
  for (size_t i = 0; i < grid.size(); ++i)
    out.values[i] *= epsilon_r(r, grid.nodes[i]);
  return out;
}

double flat_l2_norm(const SpectralFn& fhat) {
  const auto& grid = *fhat.grid;
  double acc = 0;
  for (size_t i = 0; i < grid.size(); ++i)
    acc += grid.weights[i] * std::norm(fhat.values[i]);
  return std::sqrt(alcove_factor(fhat) * acc);
}

std::vector<Weight> dominant_box(int n, const std::vector<int>& lo,
                                 const std::vector<int>& hi) {
  if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
    throw std::invalid_argument("dominant_box: bad bounds");
  std::vector<Weight> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> parts(n);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      out.push_back(Weight(std::vector<int>(parts)));
      return;
    }
    int top = j == 0 ? hi[j] : std::min(hi[j], parts[j - 1]);
    for (int v = top; v >= lo[j]; --v) {
      parts[j] = v;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

double flat_norm(const ComplexState& f) {
  double acc = 0;
  for (const auto& [w, v] : f.support()) acc += std::norm(v);
  return std::sqrt(acc);
}

}  // namespace qboson
