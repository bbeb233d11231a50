// Acceptance suite: runs every advertised claim end to end at its stated
// tolerance and prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fvlim/harness.hpp"
#include "fvlim/reconstruction.hpp"
#include "fvlim/solver.hpp"

using namespace fvlim;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void record(bool ok, const std::string& line) {
  std::printf("%s  %s\n", ok ? "PASS" : "FAIL", line.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig sine_config() {
  RunConfig cfg;
  cfg.problem = "sine";
  cfg.limiter = "comb";
  cfg.nu = 0.8;
  cfg.t_end = 20.0;
  cfg.cells = {40, 80, 160, 320, 640};
  return cfg;
}

double final_order(const ConvergenceReport& report) {
  return report.rows.back().observed_order.value();
}

}  // namespace

int main() {
  std::printf("acceptance: sine/square advection, nu=0.8, t_end=20, periodic [-1,1]\n");

  // 1. Smooth third-order convergence with the analytic alpha = pi^2.
  RunConfig c1 = sine_config();
  const ConvergenceReport r1 = run_convergence(c1);
  const double order1 = final_order(r1);
  record(order1 >= 2.7,
         fmt("criterion 1: smooth 3rd order, comb alpha=pi^2 (finest order %.3f, need >= 2.7)",
             order1));

  // 2. Overestimated alpha must not break third order.
  RunConfig c2 = sine_config();
  c2.alpha_override = 100.0 * kPi * kPi;
  const double order2 = final_order(run_convergence(c2));
  record(order2 >= 2.7,
         fmt("criterion 2: alpha overestimation 100*pi^2 (finest order %.3f, need >= 2.7)",
             order2));

  // 3. Underestimated alpha limits too often and inflates the error at n=160.
  RunConfig c3 = sine_config();
  c3.alpha_override = 1e-3 * kPi * kPi;
  c3.cells = {40, 80, 160};
  const ConvergenceReport r3 = run_convergence(c3);
  const double err3 = r3.rows.back().l1_error;
  const double err1_160 = r1.rows[2].l1_error;
  record(err3 > err1_160,
         fmt("criterion 3: alpha underestimation degrades (L1 %.3e vs %.3e at n=160)", err3,
             err1_160));

  // 4. Classical three-point baseline is second order.
  RunConfig c4 = sine_config();
  c4.limiter = "central2";
  const double order4 = final_order(run_convergence(c4));
  record(order4 >= 1.8 && order4 <= 2.2,
         fmt("criterion 4: second-order central baseline (finest order %.3f, need [1.8, 2.2])",
             order4));

  // 5. Square wave with small alpha converges at the fractional rate.
  RunConfig c5;
  c5.problem = "square";
  c5.limiter = "comb";
  c5.alpha_override = 0.1;
  c5.t_end = 20.0;
  c5.cells = {40, 80, 160, 320, 640, 1280};
  const double order5 = final_order(run_convergence(c5));
  record(order5 >= 0.60 && order5 <= 0.90,
         fmt("criterion 5: square-wave fractional order (finest order %.3f, need [0.60, 0.90])",
             order5));

  // Figs. 5a/6a are reproduced as data artifacts; the quantitative check is
  // bounded over/undershoot of the square-wave solution.
  RunConfig note_cfg = c5;
  note_cfg.cells = {160};
  const SingleRunResult note_run = run_single(note_cfg);
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < note_run.numeric.size(); ++i) {
    lo = std::min(lo, note_run.numeric[i]);
    hi = std::max(hi, note_run.numeric[i]);
  }
  record(lo >= -0.1 && hi <= 1.1,
         fmt("criterion 5 note: square solution bounded (range [%.4f, %.4f] in [-0.1, 1.1])", lo,
             hi));

  // 6. Quadratic exactness of the full third-order reconstruction.
  {
    const Grid g(-1.0, 1.0, 32);
    const double dx = g.dx();
    std::vector<double> v(32);
    for (int i = 0; i < 32; ++i) {
      const double x = g.cell_center(i);
      v[static_cast<size_t>(i)] = x * x + dx * dx / 12.0;
    }
    const InterfaceStates s = reconstruct(CellField(g, v), LimiterSpec{LimiterKind::FullO3});
    double worst = 0.0;
    for (int i = 1; i + 1 < 32; ++i) {
      const double xr = g.face(i + 1), xl = g.face(i);
      worst = std::max(worst, std::abs(s.left[static_cast<size_t>(i)] - xr * xr) /
                                  std::max(1.0, xr * xr));
      worst = std::max(worst, std::abs(s.right[static_cast<size_t>(i)] - xl * xl) /
                                  std::max(1.0, xl * xl));
    }
    record(worst <= 1e-12,
           fmt("criterion 6: quadratic exactness of FullO3 (max rel err %.2e, need <= 1e-12)",
               worst));
  }

  // 7. Lemma bound on slopes near smooth extrema of the sine.
  {
    bool ok = true;
    double worst_ratio = 0.0;
    for (int n : {40, 80, 160, 320}) {
      const Grid g(-1.0, 1.0, n);
      const CellField u = project_antiderivative(
          g, [](double x) { return -std::cos(kPi * x) / kPi; });
      const double dx = g.dx();
      const double bound = std::sqrt(2.5) * kPi * kPi * dx * dx * (1.0 + 10.0 * dx);
      for (int i = 0; i < n; ++i) {
        double dist = 2.0;
        for (double xe : {-0.5, 0.5}) {
          double d = std::abs(g.cell_center(i) - xe);
          dist = std::min(dist, std::min(d, 2.0 - d));
        }
        if (dist > dx) continue;
        const double dm = u[i] - u.value(i - 1);
        const double dp = u.value(i + 1) - u[i];
        const double ratio = std::sqrt(dm * dm + dp * dp) / bound;
        worst_ratio = std::max(worst_ratio, ratio);
        ok = ok && ratio <= 1.0;
      }
    }
    record(ok, fmt("criterion 7: lemma slope bound near extrema (worst ratio %.3f, need <= 1)",
                   worst_ratio));
  }

  // 8. Corrected symmetry of phi_new; LimO3 must show an asymmetry witness.
  {
    std::mt19937_64 rng(987654321);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    int violations = 0, witnesses = 0, premise_hits = 0;
    for (int trial = 0; trial < 100000; ++trial) {
      const double d1 = dist(rng), d2 = dist(rng);
      if (std::abs(d1) <= 1e-14 || std::abs(d2) <= 1e-14) continue;
      const SlopePair fwd{d1, d2}, flp{-d2, -d1};
      if (std::abs(two_param(phi_new, fwd) - tilde_phi_o3(fwd)) <=
          1e-12 * std::max(1.0, std::abs(d2))) {
        ++premise_hits;
        if (std::abs(two_param(phi_new, flp) - tilde_phi_o3(flp)) >
            1e-12 * std::max(1.0, std::abs(d1))) {
          ++violations;
        }
      }
      if (std::abs(two_param(phi_limo3, fwd) - tilde_phi_o3(fwd)) <=
          1e-12 * std::max(1.0, std::abs(d2))) {
        if (std::abs(two_param(phi_limo3, flp) - tilde_phi_o3(flp)) >
            1e-12 * std::max(1.0, std::abs(d1))) {
          ++witnesses;
        }
      }
    }
    record(violations == 0 && witnesses >= 1 && premise_hits > 1000,
           fmt("criterion 8: symmetry correction (phi_new violations %d of %d, LimO3 witnesses "
               "%d)",
               violations, premise_hits, witnesses));
  }

  // 9. Pointwise limiter values.
  {
    bool ok = phi_o3(1.0) == 1.0 && phi_limo3(10.0) == 1.6 && phi_new(10.0) == 1.5 &&
              std::abs(phi_new(-1.0) - 1.0 / 3.0) <= 1e-15;
    double worst = 0.0;
    for (double theta : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0, 4.0}) {
      worst = std::max(worst, std::abs(phi_as(theta, 1e-4) - phi_o3(theta)));
    }
    ok = ok && worst <= 1e-2;
    record(ok, fmt("criterion 9: pointwise limiter values (phi_as->phi_o3 max dev %.2e)", worst));
  }

  // 10. Conservation over the full run, and bit-identical artifacts.
  {
    const Problem p = square_problem();
    const Grid g(-1.0, 1.0, 160);
    const CellField u0 = p.exact_cell_averages(g, 0.0);
    SolverConfig scfg;
    scfg.courant = 0.8;
    scfg.limiter.kind = LimiterKind::Combined;
    scfg.limiter.sw = SwitchConfig{0.1, 1e-6, SlopeNorm::L2};
    scfg.flux = p.flux;
    scfg.t_end = 20.0;
    const CellField u = advance(u0, scfg);
    double mass0 = 0.0, mass = 0.0;
    for (int i = 0; i < 160; ++i) {
      mass0 += u0[i] * g.dx();
      mass += u[i] * g.dx();
    }
    const double drift = std::abs(mass - mass0) / std::abs(mass0);

    RunConfig det = sine_config();
    det.t_end = 2.0;
    det.cells = {40, 80, 160};
    det.output_path = "acceptance_det_a.csv";
    run_convergence(det);
    det.output_path = "acceptance_det_b.csv";
    run_convergence(det);
    const bool identical = slurp("acceptance_det_a.csv") == slurp("acceptance_det_b.csv");

    record(drift <= 1e-12 && identical,
           fmt("criterion 10: conservation and determinism (mass drift %.2e, need <= 1e-12; "
               "identical CSVs: %s)",
               drift, identical ? "yes" : "no"));
  }

  std::printf("%s (%d failure%s)\n", failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED",
              failures, failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}
