#include "fvlim/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fvlim {

namespace {

// Advection on the period-2 domain is a pure translation, so exact averages
// at time t are shifted-IC averages with shift fmod(t, 2); fmod is exact and
// keeps antiderivative arguments small.
double sine_antiderivative(double y) { return -std::cos(std::numbers::pi * y) / std::numbers::pi; }

// Periodic antiderivative of the square wave: one unit of mass per period.
double square_antiderivative(double y) {
  const double k = std::floor((y + 1.0) / 2.0);
  const double w = y - 2.0 * k;  // wrapped into [-1, 1)
  return k + std::clamp(w + 0.5, 0.0, 1.0);
}

CellField shifted_averages(const Grid& grid, double t, double (*antiderivative)(double)) {
  const double s = std::fmod(t, 2.0);
  std::vector<double> values(static_cast<size_t>(grid.n_cells()));
  for (int i = 0; i < grid.n_cells(); ++i) {
    values[static_cast<size_t>(i)] =
        (antiderivative(grid.face(i + 1) - s) - antiderivative(grid.face(i) - s)) / grid.dx();
  }
  return CellField(grid, std::move(values), t);
}

}  // namespace

Problem sine_problem() {
  Problem p;
  p.name = "sine";
  p.flux = FluxSpec::advection();
  p.exact_cell_averages = [](const Grid& grid, double t) {
    return shifted_averages(grid, t, sine_antiderivative);
  };
  p.alpha_analytic = std::numbers::pi * std::numbers::pi;  // max |pi^2 sin(pi x)|
  return p;
}

Problem square_problem() {
  Problem p;
  p.name = "square";
  p.flux = FluxSpec::advection();
  p.exact_cell_averages = [](const Grid& grid, double t) {
    return shifted_averages(grid, t, square_antiderivative);
  };
  p.alpha_analytic = 0.0;
  return p;
}

Problem problem_from(const std::string& name) {
  if (name == "sine") return sine_problem();
  if (name == "square") return square_problem();
  throw std::invalid_argument("unknown problem '" + name + "'");
}

double l1_error(const CellField& a, const CellField& b) {
  if (!(a.grid() == b.grid())) {
    throw std::invalid_argument("l1_error: fields live on different grids");
  }
  double sum = 0.0;
  for (int i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return a.grid().dx() * sum;
}

}  // namespace fvlim
