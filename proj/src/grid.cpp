#include "kinkbench/grid.hpp"

#include <cmath>

namespace kinkbench {

namespace {
constexpr std::size_t kMaxNodes = 2'000'000;

std::size_t cap_half_nodes(double x_max_request, double& h) {
  auto m = static_cast<std::size_t>(std::ceil(x_max_request / h - 1e-12));
  if (m < 8) m = 8;
  if (2 * m + 1 > kMaxNodes) {
    m = (kMaxNodes - 1) / 2;
    h = x_max_request / static_cast<double>(m);
  }
  return m;
}
}  // namespace

Grid make_line_grid(double x_max_request, double h_request) {
  Grid g;
  g.h = h_request;
  std::size_t m = cap_half_nodes(x_max_request, g.h);
  g.n = 2 * m + 1;
  g.center = m;
  g.x_max = static_cast<double>(m) * g.h;
  g.x_min = -g.x_max;
  g.bc = BoundaryCondition::DirichletZero;
  g.validate();
  return g;
}

Grid make_half_line_grid(double x_max_request, double h_request) {
  Grid g;
  g.h = h_request;
  std::size_t m = cap_half_nodes(x_max_request, g.h);
  g.n = m + 1;
  g.center = 0;
  g.x_min = 0.0;
  g.x_max = static_cast<double>(m) * g.h;
  g.bc = BoundaryCondition::HalfLineOdd;
  g.validate();
  return g;
}

Grid make_periodic_grid(double period, double h_request) {
  Grid g;
  auto half = static_cast<std::size_t>(std::ceil(0.5 * period / h_request));
  if (half < 8) half = 8;
  if (2 * half > kMaxNodes) half = kMaxNodes / 2;
  g.n = 2 * half;
  g.h = period / static_cast<double>(g.n);
  g.center = half;  // x(center) = 0, x(0) = -T/2
  g.x_min = -0.5 * period;
  g.x_max = 0.5 * period;  // identified with x_min
  g.bc = BoundaryCondition::Periodic;
  g.validate();
  return g;
}

Grid make_periodic_half_grid(double period, double h_request) {
  Grid g;
  auto m = static_cast<std::size_t>(std::ceil(0.5 * period / h_request));
  if (m < 8) m = 8;
  if (m + 1 > kMaxNodes) m = kMaxNodes - 1;
  g.n = m + 1;
  g.h = 0.5 * period / static_cast<double>(m);
  g.center = 0;
  g.x_min = 0.0;
  g.x_max = 0.5 * period;
  g.bc = BoundaryCondition::HalfLineOdd;
  g.validate();
  return g;
}

}  // namespace kinkbench
