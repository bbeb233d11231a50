#include "fvlim/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"

namespace fvlim {

namespace {

// Shortest round-trip decimal form; locale-independent, '.' decimal point.
std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// path semantics: "" writes nothing, "-" writes to stdout.
void write_artifact(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << content;
  out.flush();
  if (!out.good()) throw std::runtime_error("failed writing '" + path + "'");
}

LimiterSpec build_limiter(const RunConfig& cfg, double alpha) {
  LimiterSpec spec;
  spec.kind = limiter_kind_from(cfg.limiter);
  spec.q = cfg.q;
  spec.sw = SwitchConfig{alpha, cfg.epsilon, cfg.norm};
  spec.validate();
  return spec;
}

struct ResolutionRun {
  CellField numeric;
  CellField exact;
  double l1;
};

ResolutionRun run_resolution(const Problem& problem, const LimiterSpec& spec, double nu,
                             double t_end, int n_cells) {
  const Grid grid(problem.x_left, problem.x_right, n_cells);
  const CellField initial = problem.exact_cell_averages(grid, 0.0);
  SolverConfig scfg;
  scfg.courant = nu;
  scfg.limiter = spec;
  scfg.flux = problem.flux;
  scfg.t_end = t_end;
  CellField numeric = advance(initial, scfg);
  CellField exact = problem.exact_cell_averages(grid, t_end);
  const double l1 = l1_error(numeric, exact);
  return {std::move(numeric), std::move(exact), l1};
}

ConvergenceReport make_report(const RunConfig& cfg, double alpha) {
  const Problem problem = problem_from(cfg.problem);
  const LimiterSpec spec = build_limiter(cfg, alpha);
  ConvergenceReport report;
  report.problem = cfg.problem;
  report.limiter = cfg.limiter;
  report.alpha_used = alpha;
  report.nu = cfg.nu;
  report.t_end = cfg.t_end;
  for (int n : cfg.cells) {
    ResolutionRun run = run_resolution(problem, spec, cfg.nu, cfg.t_end, n);
    ConvergenceRow row;
    row.n_cells = n;
    row.dx = (problem.x_right - problem.x_left) / n;
    row.l1_error = run.l1;
    if (!report.rows.empty()) {
      const ConvergenceRow& prev = report.rows.back();
      row.observed_order =
          std::log(prev.l1_error / row.l1_error) / std::log(prev.dx / row.dx);
    }
    report.rows.push_back(row);
  }
  return report;
}

nlohmann::ordered_json report_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["problem"] = report.problem;
  j["limiter"] = report.limiter;
  j["alpha_used"] = report.alpha_used;
  j["nu"] = report.nu;
  j["t_end"] = report.t_end;
  j["rows"] = nlohmann::ordered_json::array();
  for (const ConvergenceRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["n_cells"] = row.n_cells;
    r["dx"] = row.dx;
    r["l1_error"] = row.l1_error;
    if (row.observed_order) {
      r["observed_order"] = *row.observed_order;
    } else {
      r["observed_order"] = nullptr;
    }
    j["rows"].push_back(r);
  }
  return j;
}

}  // namespace

void RunConfig::validate() const {
  problem_from(problem);  // throws on unknown token
  const LimiterKind kind = limiter_kind_from(limiter);
  if (kind == LimiterKind::ArtebrantSchroll && !(q > 0.0)) {
    throw std::invalid_argument("RunConfig: q must be > 0");
  }
  if (!(nu > 0.0) || !(nu <= 1.0)) {
    throw std::invalid_argument("RunConfig: nu must lie in (0, 1]");
  }
  if (!std::isfinite(t_end) || t_end < 0.0) {
    throw std::invalid_argument("RunConfig: t_end must be finite and >= 0");
  }
  if (cells.empty()) throw std::invalid_argument("RunConfig: cells must not be empty");
  for (size_t k = 0; k < cells.size(); ++k) {
    if (cells[k] < 4) throw std::invalid_argument("RunConfig: every cell count must be >= 4");
    if (k > 0 && cells[k] <= cells[k - 1]) {
      throw std::invalid_argument("RunConfig: cells must be strictly increasing");
    }
  }
  if (alpha_override && (!std::isfinite(*alpha_override) || *alpha_override < 0.0)) {
    throw std::invalid_argument("RunConfig: alpha override must be finite and >= 0");
  }
  SwitchConfig{alpha_override.value_or(0.0), epsilon, norm}.validate();
}

double resolve_alpha(const RunConfig& cfg) {
  if (cfg.alpha_override) return *cfg.alpha_override;
  return problem_from(cfg.problem).alpha_analytic;
}

SingleRunResult run_single(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.cells.size() != 1) {
    throw std::invalid_argument("run_single: exactly one cell count expected");
  }
  const double alpha = resolve_alpha(cfg);
  const Problem problem = problem_from(cfg.problem);
  ResolutionRun run =
      run_resolution(problem, build_limiter(cfg, alpha), cfg.nu, cfg.t_end, cfg.cells[0]);

  if (cfg.format == OutputFormat::Csv) {
    std::string csv = "x_center,u_numeric,u_exact\n";
    for (int i = 0; i < run.numeric.size(); ++i) {
      csv += fmt(run.numeric.grid().cell_center(i));
      csv += ',';
      csv += fmt(run.numeric[i]);
      csv += ',';
      csv += fmt(run.exact[i]);
      csv += '\n';
    }
    write_artifact(cfg.output_path, csv);
  } else {
    nlohmann::ordered_json j;
    j["problem"] = cfg.problem;
    j["limiter"] = cfg.limiter;
    j["alpha_used"] = alpha;
    j["nu"] = cfg.nu;
    j["t_end"] = cfg.t_end;
    j["n_cells"] = cfg.cells[0];
    j["l1_error"] = run.l1;
    j["cells"] = nlohmann::ordered_json::array();
    for (int i = 0; i < run.numeric.size(); ++i) {
      j["cells"].push_back({{"x_center", run.numeric.grid().cell_center(i)},
                            {"u_numeric", run.numeric[i]},
                            {"u_exact", run.exact[i]}});
    }
    write_artifact(cfg.output_path, j.dump(2) + "\n");
  }
  return {std::move(run.numeric), std::move(run.exact), run.l1};
}

ConvergenceReport run_convergence(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.cells.size() < 3) {
    throw std::invalid_argument("run_convergence: need at least 3 cell counts");
  }
  ConvergenceReport report = make_report(cfg, resolve_alpha(cfg));
  if (cfg.format == OutputFormat::Csv) {
    write_artifact(cfg.output_path, to_csv(report));
  } else {
    write_artifact(cfg.output_path, to_json_string(report));
  }
  return report;
}

std::vector<ConvergenceReport> run_alpha_sweep(const RunConfig& cfg,
                                               const std::vector<double>& alphas) {
  cfg.validate();
  if (cfg.cells.size() < 3) {
    throw std::invalid_argument("run_alpha_sweep: need at least 3 cell counts");
  }
  if (alphas.empty()) throw std::invalid_argument("run_alpha_sweep: alphas must not be empty");
  for (double a : alphas) {
    if (!std::isfinite(a) || a < 0.0) {
      throw std::invalid_argument("run_alpha_sweep: alphas must be finite and >= 0");
    }
  }

  std::vector<ConvergenceReport> reports;
  reports.reserve(alphas.size());
  for (double a : alphas) reports.push_back(make_report(cfg, a));

  if (cfg.format == OutputFormat::Csv) {
    std::string csv = "alpha,n_cells,dx,l1_error,observed_order\n";
    for (const ConvergenceReport& report : reports) {
      for (const ConvergenceRow& row : report.rows) {
        csv += fmt(report.alpha_used);
        csv += ',';
        csv += std::to_string(row.n_cells);
        csv += ',';
        csv += fmt(row.dx);
        csv += ',';
        csv += fmt(row.l1_error);
        csv += ',';
        if (row.observed_order) csv += fmt(*row.observed_order);
        csv += '\n';
      }
    }
    write_artifact(cfg.output_path, csv);
  } else {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const ConvergenceReport& report : reports) j.push_back(report_json(report));
    write_artifact(cfg.output_path, j.dump(2) + "\n");
  }
  return reports;
}

void emit_limiter_table(double theta_lo, double theta_hi, int steps, double q,
                        const std::string& output_path, OutputFormat format) {
  if (steps < 2) throw std::invalid_argument("emit_limiter_table: need steps >= 2");
  if (!(theta_lo < theta_hi)) {
    throw std::invalid_argument("emit_limiter_table: need theta_lo < theta_hi");
  }
  if (!(q > 0.0)) throw std::invalid_argument("emit_limiter_table: q must be > 0");

  const double span = theta_hi - theta_lo;
  if (format == OutputFormat::Csv) {
    std::string csv = "theta,phi_o3,phi_as,phi_limo3,phi_new,phi_second_order\n";
    for (int j = 0; j < steps; ++j) {
      const double theta = theta_lo + span * j / (steps - 1);
      csv += fmt(theta);
      csv += ',';
      csv += fmt(phi_o3(theta));
      csv += ',';
      csv += fmt(phi_as(theta, q));
      csv += ',';
      csv += fmt(phi_limo3(theta));
      csv += ',';
      csv += fmt(phi_new(theta));
      csv += ',';
      csv += fmt(phi_second_order(theta));
      csv += '\n';
    }
    write_artifact(output_path, csv);
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int j = 0; j < steps; ++j) {
      const double theta = theta_lo + span * j / (steps - 1);
      rows.push_back({{"theta", theta},
                      {"phi_o3", phi_o3(theta)},
                      {"phi_as", phi_as(theta, q)},
                      {"phi_limo3", phi_limo3(theta)},
                      {"phi_new", phi_new(theta)},
                      {"phi_second_order", phi_second_order(theta)}});
    }
    nlohmann::ordered_json j;
    j["q"] = q;
    j["rows"] = rows;
    write_artifact(output_path, j.dump(2) + "\n");
  }
}

std::string to_csv(const ConvergenceReport& report) {
  std::string csv = "n_cells,dx,l1_error,observed_order\n";
  for (const ConvergenceRow& row : report.rows) {
    csv += std::to_string(row.n_cells);
    csv += ',';
    csv += fmt(row.dx);
    csv += ',';
    csv += fmt(row.l1_error);
    csv += ',';
    if (row.observed_order) csv += fmt(*row.observed_order);
    csv += '\n';
  }
  return csv;
}

std::string to_json_string(const ConvergenceReport& report) {
  return report_json(report).dump(2) + "\n";
}

}  // namespace fvlim
