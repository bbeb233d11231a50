#include "fvlim/solver.hpp"

#include <algorithm>
#include <cmath>

#include "fvlim/reconstruction.hpp"

namespace fvlim {

FluxSpec FluxSpec::advection() {
  return {[](double u) { return u; }, [](double) { return 1.0; }, "advection"};
}

FluxSpec FluxSpec::burgers() {
  return {[](double u) { return 0.5 * u * u; }, [](double u) { return u; }, "burgers"};
}

void SolverConfig::validate() const {
  if (!(courant > 0.0) || !(courant <= 1.0)) {
    throw std::invalid_argument("SolverConfig: courant must lie in (0, 1]");
  }
  if (!std::isfinite(t_end) || t_end < 0.0) {
    throw std::invalid_argument("SolverConfig: t_end must be finite and >= 0");
  }
  if (!flux.f || !flux.df) {
    throw std::invalid_argument("SolverConfig: flux functions not set");
  }
  limiter.validate();
}

SolverError::SolverError(double time, const std::string& message)
    : std::runtime_error(message + " (at t = " + std::to_string(time) + ")"), time_(time) {}

double numerical_flux(double u_minus, double u_plus, const FluxSpec& flux) {
  const double lambda = std::max(std::abs(flux.df(u_minus)), std::abs(flux.df(u_plus)));
  return 0.5 * (flux.f(u_minus) + flux.f(u_plus)) - 0.5 * lambda * (u_plus - u_minus);
}

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace

std::vector<double> rhs(const CellField& field, const SolverConfig& cfg) {
  const int n = field.size();
  const double dx = field.grid().dx();
  const InterfaceStates states = reconstruct(field, cfg.limiter);

  // fhat[i] is the flux through x_{i+1/2}: left state from cell i, right
  // state from cell i+1.
  std::vector<double> fhat(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int ip = (i + 1 == n) ? 0 : i + 1;
    fhat[static_cast<size_t>(i)] =
        numerical_flux(states.left[static_cast<size_t>(i)], states.right[static_cast<size_t>(ip)], cfg.flux);
  }

  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int im = (i == 0) ? n - 1 : i - 1;
    out[static_cast<size_t>(i)] =
        -(fhat[static_cast<size_t>(i)] - fhat[static_cast<size_t>(im)]) / dx;
  }
  if (!all_finite(out)) {
    throw SolverError(field.time(), "non-finite flux divergence");
  }
  return out;
}

double cfl_dt(const CellField& field, const SolverConfig& cfg) {
  double speed = 0.0;
  for (int i = 0; i < field.size(); ++i) {
    speed = std::max(speed, std::abs(cfg.flux.df(field[i])));
  }
  if (!(speed > 0.0)) {
    throw SolverError(field.time(), "zero maximal wave speed; cannot form a CFL step");
  }
  const double dt = cfg.courant * field.grid().dx() / speed;
  const double remaining = cfg.t_end - field.time();
  return std::min(dt, remaining);
}

std::vector<double> ssp_rk3_step(
    const std::vector<double>& u, double dt,
    const std::function<std::vector<double>(const std::vector<double>&)>& L) {
  const size_t n = u.size();
  std::vector<double> k = L(u);
  std::vector<double> u1(n);
  for (size_t i = 0; i < n; ++i) u1[i] = u[i] + dt * k[i];

  k = L(u1);
  std::vector<double> u2(n);
  for (size_t i = 0; i < n; ++i) u2[i] = 0.75 * u[i] + 0.25 * (u1[i] + dt * k[i]);

  k = L(u2);
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) {
    out[i] = u[i] / 3.0 + 2.0 / 3.0 * (u2[i] + dt * k[i]);
  }
  return out;
}

CellField step_ssp_rk3(const CellField& field, double dt, const SolverConfig& cfg) {
  if (!(dt > 0.0)) throw SolverError(field.time(), "step_ssp_rk3 needs dt > 0");
  const Grid& grid = field.grid();
  const double t = field.time();
  auto L = [&](const std::vector<double>& v) {
    if (!all_finite(v)) throw SolverError(t, "non-finite intermediate stage");
    return rhs(CellField(grid, v, t), cfg);
  };
  std::vector<double> next = ssp_rk3_step(field.values(), dt, L);
  if (!all_finite(next)) throw SolverError(t, "non-finite state after step");
  return CellField(grid, std::move(next), t + dt);
}

CellField advance(const CellField& field, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.t_end < field.time()) {
    throw std::invalid_argument("advance: t_end lies before the field time");
  }
  CellField u = field;
  while (u.time() < cfg.t_end) {
    u = step_ssp_rk3(u, cfl_dt(u, cfg), cfg);
  }
  return u;
}

}  // namespace fvlim
