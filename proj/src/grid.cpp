#include "fvlim/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace fvlim {

Grid::Grid(double x_left, double x_right, int n_cells)
    : x_left_(x_left), x_right_(x_right), n_cells_(n_cells) {
  if (!std::isfinite(x_left) || !std::isfinite(x_right) || !(x_left < x_right)) {
    throw std::invalid_argument("Grid: domain must satisfy x_left < x_right");
  }
  if (n_cells < 4) {
    throw std::invalid_argument("Grid: need n_cells >= 4, got " + std::to_string(n_cells));
  }
  dx_ = (x_right - x_left) / n_cells;
}

CellField::CellField(Grid grid, std::vector<double> values, double time)
    : grid_(grid), values_(std::move(values)), time_(time) {
  if (static_cast<int>(values_.size()) != grid_.n_cells()) {
    throw std::invalid_argument("CellField: values size does not match n_cells");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("CellField: non-finite cell average");
  }
  if (!std::isfinite(time_)) throw std::invalid_argument("CellField: non-finite time");
}

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1, 1]; exact through degree 9.
constexpr double kGlNode1 = 0.53846931010568309104;
constexpr double kGlNode2 = 0.90617984593866399280;
constexpr double kGlWeight0 = 0.56888888888888888889;
constexpr double kGlWeight1 = 0.47862867049936646804;
constexpr double kGlWeight2 = 0.23692688505618908751;

}  // namespace

CellField project_function(const Grid& grid, const std::function<double(double)>& f) {
  std::vector<double> values(static_cast<size_t>(grid.n_cells()));
  const double h = 0.5 * grid.dx();
  for (int i = 0; i < grid.n_cells(); ++i) {
    const double m = grid.cell_center(i);
    const double s = kGlWeight0 * f(m) +
                     kGlWeight1 * (f(m - h * kGlNode1) + f(m + h * kGlNode1)) +
                     kGlWeight2 * (f(m - h * kGlNode2) + f(m + h * kGlNode2));
    values[static_cast<size_t>(i)] = 0.5 * s;  // (1/dx) * h * sum
  }
  return CellField(grid, std::move(values), 0.0);
}

CellField project_antiderivative(const Grid& grid, const std::function<double(double)>& antiderivative) {
  std::vector<double> values(static_cast<size_t>(grid.n_cells()));
  for (int i = 0; i < grid.n_cells(); ++i) {
    values[static_cast<size_t>(i)] =
        (antiderivative(grid.face(i + 1)) - antiderivative(grid.face(i))) / grid.dx();
  }
  return CellField(grid, std::move(values), 0.0);
}

}  // namespace fvlim
