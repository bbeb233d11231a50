#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fvlim/grid.hpp"
#include "fvlim/limiters.hpp"
#include "fvlim/problems.hpp"

namespace fvlim {

struct ConvergenceRow {
  int n_cells = 0;
  double dx = 0.0;
  double l1_error = 0.0;
  std::optional<double> observed_order;  // absent for the first row
};

/// Per-resolution L1 errors with pairwise observed orders
/// log(err_{k-1}/err_k) / log(dx_{k-1}/dx_k).
struct ConvergenceReport {
  std::string problem;
  std::string limiter;
  double alpha_used = 0.0;
  double nu = 0.8;
  double t_end = 20.0;
  std::vector<ConvergenceRow> rows;
};

enum class OutputFormat { Csv, Json };

struct RunConfig {
  std::string problem = "sine";  // sine | square
  std::string limiter = "comb";  // central2 | o3 | as | limo3 | new | comb
  double q = 1.4;
  std::optional<double> alpha_override;
  double epsilon = 1e-6;
  SlopeNorm norm = SlopeNorm::L2;
  double nu = 0.8;
  double t_end = 20.0;
  std::vector<int> cells{40, 80, 160, 320, 640};
  std::string output_path;  // empty: no artifact written; "-": stdout
  OutputFormat format = OutputFormat::Csv;

  void validate() const;  // throws std::invalid_argument
};

/// alpha fed to the Combined switch: the override when present, otherwise the
/// problem's analytic value.
double resolve_alpha(const RunConfig& cfg);

struct SingleRunResult {
  CellField numeric;
  CellField exact;
  double l1_error = 0.0;
};

/// One simulation at the single configured resolution; writes per-cell
/// (x_center, u_numeric, u_exact) rows when an output path is set.
SingleRunResult run_single(const RunConfig& cfg);

/// One run per resolution in cfg.cells (at least 3), with observed orders.
ConvergenceReport run_convergence(const RunConfig& cfg);

/// One convergence report per alpha; a single combined artifact is written.
std::vector<ConvergenceReport> run_alpha_sweep(const RunConfig& cfg, const std::vector<double>& alphas);

/// CSV table of all ratio-form limiters over a uniform theta grid
/// (columns theta, phi_o3, phi_as, phi_limo3, phi_new, phi_second_order).
void emit_limiter_table(double theta_lo, double theta_hi, int steps, double q,
                        const std::string& output_path, OutputFormat format = OutputFormat::Csv);

// Serialization helpers (also used by the tests).
std::string to_csv(const ConvergenceReport& report);
std::string to_json_string(const ConvergenceReport& report);

}  // namespace fvlim
