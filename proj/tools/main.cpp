// Command-line driver: single runs, convergence sweeps, alpha-sensitivity
// studies, and limiter-curve tables. Artifacts go to --out, or stdout when no
// path is given; progress summaries go to stderr.

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fvlim/harness.hpp"

namespace {

void add_run_options(CLI::App* cmd, fvlim::RunConfig& cfg) {
  cmd->add_option("--problem", cfg.problem, "Test problem")
      ->check(CLI::IsMember({"sine", "square"}))
      ->capture_default_str();
  cmd->add_option("--limiter", cfg.limiter, "Reconstruction limiter")
      ->check(CLI::IsMember({"central2", "o3", "as", "limo3", "new", "comb"}))
      ->capture_default_str();
  cmd->add_option("--q", cfg.q, "Artebrant-Schroll exponent q")->capture_default_str();
  cmd->add_option("--alpha", cfg.alpha_override,
                  "Override the switch bound alpha (default: problem's analytic value)");
  cmd->add_option("--epsilon", cfg.epsilon, "Blend band half-width")->capture_default_str();
  cmd->add_option("--norm", cfg.norm, "Slope norm for the switch")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, fvlim::SlopeNorm>{{"l2", fvlim::SlopeNorm::L2},
                                                  {"l1", fvlim::SlopeNorm::L1}}))
      ->default_str("l2");
  cmd->add_option("--nu", cfg.nu, "Courant number")->capture_default_str();
  cmd->add_option("--t-end", cfg.t_end, "Final time")->capture_default_str();
  cmd->add_option("--cells", cfg.cells, "Comma-separated cell counts")
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--out", cfg.output_path, "Output path (default: stdout)");
  cmd->add_option("--format", cfg.format, "Artifact format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, fvlim::OutputFormat>{{"csv", fvlim::OutputFormat::Csv},
                                                     {"json", fvlim::OutputFormat::Json}}))
      ->default_str("csv");
}

void print_report(const fvlim::ConvergenceReport& report) {
  std::fprintf(stderr, "# %s / %s  alpha=%g nu=%g t_end=%g\n", report.problem.c_str(),
               report.limiter.c_str(), report.alpha_used, report.nu, report.t_end);
  for (const auto& row : report.rows) {
    if (row.observed_order) {
      std::fprintf(stderr, "#   n=%5d  L1=%.6e  order=%.4f\n", row.n_cells, row.l1_error,
                   *row.observed_order);
    } else {
      std::fprintf(stderr, "#   n=%5d  L1=%.6e\n", row.n_cells, row.l1_error);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D finite volume solver with third-order limiter functions"};
  app.require_subcommand(1);

  fvlim::RunConfig cfg;
  cfg.output_path = "-";
  std::vector<double> alphas;

  CLI::App* solve = app.add_subcommand("solve", "Run one simulation and dump the solution");
  fvlim::RunConfig solve_cfg = cfg;
  solve_cfg.cells = {160};
  add_run_options(solve, solve_cfg);

  CLI::App* converge = app.add_subcommand("converge", "L1-error convergence study");
  fvlim::RunConfig conv_cfg = cfg;
  add_run_options(converge, conv_cfg);

  CLI::App* sweep = app.add_subcommand("sweep-alpha", "Convergence studies over several alphas");
  fvlim::RunConfig sweep_cfg = cfg;
  add_run_options(sweep, sweep_cfg);
  sweep->add_option("--alphas", alphas, "Comma-separated alpha values")
      ->delimiter(',')
      ->required();

  CLI::App* table = app.add_subcommand("limiter-table", "Tabulate all limiter curves phi(theta)");
  double theta_min = -2.0, theta_max = 4.0, table_q = 1.4;
  int steps = 601;
  std::string table_out = "-";
  fvlim::OutputFormat table_format = fvlim::OutputFormat::Csv;
  table->add_option("--theta-min", theta_min)->capture_default_str();
  table->add_option("--theta-max", theta_max)->capture_default_str();
  table->add_option("--steps", steps)->capture_default_str();
  table->add_option("--q", table_q, "Artebrant-Schroll exponent q")->capture_default_str();
  table->add_option("--out", table_out, "Output path (default: stdout)");
  table->add_option("--format", table_format, "Artifact format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, fvlim::OutputFormat>{{"csv", fvlim::OutputFormat::Csv},
                                                     {"json", fvlim::OutputFormat::Json}}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      const fvlim::SingleRunResult result = fvlim::run_single(solve_cfg);
      std::fprintf(stderr, "# %s / %s  n=%d t_end=%g  l1_error=%.6e\n", solve_cfg.problem.c_str(),
                   solve_cfg.limiter.c_str(), solve_cfg.cells[0], solve_cfg.t_end, result.l1_error);
    } else if (converge->parsed()) {
      print_report(fvlim::run_convergence(conv_cfg));
    } else if (sweep->parsed()) {
      for (const auto& report : fvlim::run_alpha_sweep(sweep_cfg, alphas)) print_report(report);
    } else if (table->parsed()) {
      fvlim::emit_limiter_table(theta_min, theta_max, steps, table_q, table_out, table_format);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
