#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fvlim/grid.hpp"
#include "fvlim/limiters.hpp"

namespace fvlim {

/// Scalar flux f(u) with its derivative (the wave speed).
struct FluxSpec {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::string name;

  static FluxSpec advection();  // f(u) = u
  static FluxSpec burgers();    // f(u) = u^2/2
};

struct SolverConfig {
  double courant = 0.8;  // nu in (0, 1]
  LimiterSpec limiter{};
  FluxSpec flux = FluxSpec::advection();
  double t_end = 0.0;

  void validate() const;
};

/// Thrown when a run goes non-finite; carries the simulation time at failure.
class SolverError : public std::runtime_error {
 public:
  SolverError(double time, const std::string& message);
  double time() const { return time_; }

 private:
  double time_;
};

/// Local Lax-Friedrichs (Rusanov) flux:
/// 1/2 (f(u-) + f(u+)) - 1/2 max(|f'(u-)|, |f'(u+)|) (u+ - u-).
/// Exact upwinding for linear advection.
double numerical_flux(double u_minus, double u_plus, const FluxSpec& flux);

/// Semi-discrete FV right-hand side: -(fhat_{i+1/2} - fhat_{i-1/2}) / dx.
std::vector<double> rhs(const CellField& field, const SolverConfig& cfg);

/// dt = courant * dx / max_i |f'(ubar_i)|, truncated so the step lands
/// exactly on cfg.t_end.
double cfl_dt(const CellField& field, const SolverConfig& cfg);

/// One Shu-Osher SSP-RK3 step of du/dt = L(u) on a plain state vector:
///   u1 = u + dt L(u)
///   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
///   u' = 1/3 u + 2/3 (u2 + dt L(u2))
std::vector<double> ssp_rk3_step(
    const std::vector<double>& u, double dt,
    const std::function<std::vector<double>(const std::vector<double>&)>& L);

CellField step_ssp_rk3(const CellField& field, double dt, const SolverConfig& cfg);

/// Repeated cfl_dt + step_ssp_rk3 until field.time() == cfg.t_end exactly.
CellField advance(const CellField& field, const SolverConfig& cfg);

}  // namespace fvlim
