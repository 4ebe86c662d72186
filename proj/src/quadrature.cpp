#include "qboson/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qboson {

namespace {
constexpr double kPi = std::numbers::pi;
}

// Newton iteration on the Legendre polynomial P_m; standard three-term
// recurrence for value and derivative. Nodes are symmetric about 0.
GaussLegendre gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussLegendre gl;
  gl.nodes.resize(m);
  gl.weights.resize(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = -x;
    gl.weights[i] = w;
    gl.nodes[m - 1 - i] = x;
    gl.weights[m - 1 - i] = w;
  }
  return gl;
}

double QuadratureGrid::total_weight() const {
  double s = 0;
  for (double w : weights) s += w;
  return s;
}

namespace {

std::shared_ptr<const QuadratureGrid> tensor_grid(const Vec& lo, const Vec& hi,
                                                  int order, bool cube) {
  const int n = static_cast<int>(lo.size());
  auto grid = std::make_shared<QuadratureGrid>();
  grid->dim = n;
  grid->order = order;
  grid->cube = cube;
  grid->lo = lo;
  grid->hi = hi;

  const GaussLegendre gl = gauss_legendre(order);
  std::vector<Vec> axis_nodes(n);
  std::vector<Vec> axis_weights(n);
  for (int j = 0; j < n; ++j) {
    if (!(lo[j] < hi[j]))
      throw std::invalid_argument("quadrature grid: empty axis interval");
    axis_nodes[j].resize(order);
    axis_weights[j].resize(order);
    const double mid = 0.5 * (lo[j] + hi[j]), half = 0.5 * (hi[j] - lo[j]);
    for (int i = 0; i < order; ++i) {
      axis_nodes[j][i] = mid + half * gl.nodes[i];
      axis_weights[j][i] = half * gl.weights[i];
    }
  }

  size_t total = 1;
  for (int j = 0; j < n; ++j) total *= order;
  grid->nodes.reserve(total);
  grid->weights.reserve(total);
  std::vector<int> idx(n, 0);
  while (true) {
    Vec node(n);
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      node[j] = axis_nodes[j][idx[j]];
      w *= axis_weights[j][idx[j]];
    }
    grid->nodes.push_back(std::move(node));
    grid->weights.push_back(w);
    int j = n - 1;
    while (j >= 0 && ++idx[j] == order) idx[j--] = 0;
    if (j < 0) break;
  }
  return grid;
}

}  // namespace

std::shared_ptr<const QuadratureGrid> build_grid(int n, int order) {
  if (n < 1) throw std::invalid_argument("build_grid: n must be >= 1");
  if (order < 4) throw std::invalid_argument("build_grid: order must be >= 4");
  return tensor_grid(Vec(n, -kPi), Vec(n, kPi), order, true);
}

std::shared_ptr<const QuadratureGrid> build_box_grid(const Vec& lo,
                                                     const Vec& hi,
                                                     int order) {
  if (lo.empty() || lo.size() != hi.size())
    throw std::invalid_argument("build_box_grid: bad box");
  if (order < 4)
    throw std::invalid_argument("build_box_grid: order must be >= 4");
  return tensor_grid(lo, hi, order, false);
}

}  // namespace qboson
