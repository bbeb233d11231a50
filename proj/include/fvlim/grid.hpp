#pragma once

#include <functional>
#include <vector>

namespace fvlim {

/// Uniform periodic 1D mesh on [x_left, x_right] with n_cells control cells.
/// Cell centers are computed from the index, never accumulated, so
/// cell_center(i+1) - cell_center(i) == dx exactly.
class Grid {
 public:
  Grid(double x_left, double x_right, int n_cells);

  double x_left() const { return x_left_; }
  double x_right() const { return x_right_; }
  int n_cells() const { return n_cells_; }
  double dx() const { return dx_; }

  /// Center of cell i, i in [0, n_cells).
  double cell_center(int i) const { return x_left_ + (i + 0.5) * dx_; }
  /// Face position x_{i-1/2}, i in [0, n_cells].
  double face(int i) const { return x_left_ + i * dx_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  double x_left_;
  double x_right_;
  int n_cells_;
  double dx_;
};

/// Cell-average field bound to a grid at a simulation time. Immutable after
/// construction; periodic access through value() wraps the index with a
/// non-negative modulo.
class CellField {
 public:
  CellField(Grid grid, std::vector<double> values, double time = 0.0);

  const Grid& grid() const { return grid_; }
  double time() const { return time_; }
  int size() const { return grid_.n_cells(); }
  const std::vector<double>& values() const { return values_; }

  /// Raw access, i in [0, n_cells).
  double operator[](int i) const { return values_[static_cast<size_t>(i)]; }

  /// Periodic access for any integer index.
  double value(long long i) const {
    const long long n = grid_.n_cells();
    long long m = i % n;
    if (m < 0) m += n;
    return values_[static_cast<size_t>(m)];
  }

 private:
  Grid grid_;
  std::vector<double> values_;
  double time_;
};

/// Cell averages of f by 5-point Gauss-Legendre quadrature per cell.
/// Exact for polynomials up to degree 9.
CellField project_function(const Grid& grid, const std::function<double(double)>& f);

/// Exact cell averages from an antiderivative: value(i) = (F(b)-F(a))/dx.
CellField project_antiderivative(const Grid& grid, const std::function<double(double)>& antiderivative);

}  // namespace fvlim
