#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kinkbench {

// One real value per grid node.
using Field = std::vector<double>;

enum class BoundaryCondition {
  DirichletZero,  // u pinned to 0 at both ends
  Periodic,       // node n-1 wraps to node 0, grid spans one period
  HalfLineOdd,    // x_min = 0, u(0) = 0; used for odd minimizers
};

// Uniform 1D grid. Node coordinates are computed as integer multiples of h
// relative to the center node so that symmetric grids are exactly symmetric
// in floating point.
struct Grid {
  double x_min = 0.0;
  double x_max = 0.0;
  std::size_t n = 0;
  double h = 0.0;
  BoundaryCondition bc = BoundaryCondition::DirichletZero;
  // index of the node sitting at x = 0 (line and periodic grids); 0 for
  // half-line grids
  std::size_t center = 0;

  double x(std::size_t i) const {
    return (static_cast<double>(i) - static_cast<double>(center)) * h;
  }

  bool pinned(std::size_t i) const {
    switch (bc) {
      case BoundaryCondition::DirichletZero:
        return i == 0 || i + 1 == n;
      case BoundaryCondition::HalfLineOdd:
        return i == 0 || i + 1 == n;
      case BoundaryCondition::Periodic:
        return false;
    }
    return false;
  }

  // trapezoid weight of node i for the pointwise integrals
  double weight(std::size_t i) const {
    if (bc == BoundaryCondition::Periodic) return h;
    return (i == 0 || i + 1 == n) ? 0.5 * h : h;
  }

  // length of the represented interval (one period for periodic grids)
  double length() const {
    if (bc == BoundaryCondition::Periodic) return h * static_cast<double>(n);
    return x_max - x_min;
  }

  void validate() const {
    if (n < 16) throw std::invalid_argument("grid: n >= 16 required");
    if (!(h > 0.0)) throw std::invalid_argument("grid: h > 0 required");
  }
};

// Symmetric line grid [-m*h, m*h] with a node at 0.
Grid make_line_grid(double x_max_request, double h_request);

// Half line [0, m*h], both end nodes pinned (odd constraint at the origin,
// truncation at the far end).
Grid make_half_line_grid(double x_max_request, double h_request);

// One period [-T/2, T/2), n nodes (n even so that a node sits at 0).
Grid make_periodic_grid(double period, double h_request);

// Half period [0, T/2], both ends pinned; used for periodic odd minimizers.
Grid make_periodic_half_grid(double period, double h_request);

}  // namespace kinkbench
