#ifndef QBOSON_QUADRATURE_HPP
#define QBOSON_QUADRATURE_HPP

#include <memory>
#include <vector>

#include "qboson/hall_littlewood.hpp"

namespace qboson {

// Gauss-Legendre nodes and weights on [-1, 1]
struct GaussLegendre {
  std::vector<double> nodes, weights;
};
GaussLegendre gauss_legendre(int m);

// Tensor-product Gauss-Legendre grid, either on the full cube (-pi,pi)^n or
// on an axis-aligned box. Alcove integrals of symmetric integrands over a
// cube grid are the cube sum divided by n!; box grids lying inside the
// alcove integrate directly.
struct QuadratureGrid {
  int dim = 0;
  int order = 0;       // per-axis order M
  bool cube = false;   // full (-pi,pi)^dim grid
  std::vector<double> lo, hi;           // per-axis interval
  std::vector<Vec> nodes;               // flattened tensor product
  std::vector<double> weights;

  size_t size() const { return nodes.size(); }
  double total_weight() const;
};

// full-cube grid on (-pi,pi)^n; requires order >= 4
std::shared_ptr<const QuadratureGrid> build_grid(int n, int order);

// box grid on prod_j [lo_j, hi_j]
std::shared_ptr<const QuadratureGrid> build_box_grid(const Vec& lo,
                                                     const Vec& hi, int order);

}  // namespace qboson

#endif
