#pragma once

#include <functional>
#include <string>

#include "fvlim/grid.hpp"
#include "fvlim/solver.hpp"

namespace fvlim {

/// A canonical test problem: flux, domain, exact cell averages at any time,
/// and the analytic curvature bound alpha = max |u0''| over the smooth part
/// of the domain.
struct Problem {
  std::string name;
  FluxSpec flux;
  double x_left = -1.0;
  double x_right = 1.0;
  std::function<CellField(const Grid&, double)> exact_cell_averages;
  double alpha_analytic = 0.0;
};

/// Linear advection of u0(x) = sin(pi x) on [-1, 1]; alpha = pi^2.
Problem sine_problem();

/// Linear advection of the square wave u0 = 1 on [-0.5, 0.5] within [-1, 1];
/// alpha = 0 (the initial condition has zero curvature away from the jumps).
Problem square_problem();

Problem problem_from(const std::string& name);  // "sine" | "square"

/// dx * sum_i |a_i - b_i|; both fields must live on the same grid.
double l1_error(const CellField& a, const CellField& b);

}  // namespace fvlim
