#pragma once

#include <cmath>
#include <string>

namespace fvlim {

/// Lateral cell-average differences for one cell:
/// minus = delta_{i-1/2} = ubar_i - ubar_{i-1},
/// plus  = delta_{i+1/2} = ubar_{i+1} - ubar_i.
struct SlopePair {
  double minus = 0.0;
  double plus = 0.0;
};

enum class SlopeNorm { L2, L1 };

/// Parameters of the smooth-extremum switch eta. alpha bounds |u0''| over the
/// smooth part of the domain; eta compares the slope-vector norm against
/// scale()*alpha*dx^2 and blends across a band of half-width epsilon.
struct SwitchConfig {
  double alpha = 0.0;
  double epsilon = 1e-6;
  SlopeNorm norm = SlopeNorm::L2;

  /// Norm constant c: sqrt(5/2) for L2, 2 for L1.
  double scale() const { return norm == SlopeNorm::L2 ? std::sqrt(2.5) : 2.0; }

  void validate() const;  // throws std::invalid_argument
};

enum class LimiterKind {
  SecondOrderCentral,  // phi(theta) = (1+theta)/2
  FullO3,              // (2 delta_+ + delta_-)/3, unconditionally
  ArtebrantSchroll,    // double-logarithmic phi_AS(theta, q)
  LimO3,               // capped third-order limiter, caps 1.6 and -theta/2
  New,                 // symmetry-corrected variant, caps 1.5 and -theta
  Combined,            // FullO3 / New switched by eta
};

/// Tagged reconstruction choice with its parameters (q for ArtebrantSchroll,
/// the switch configuration for Combined).
struct LimiterSpec {
  LimiterKind kind = LimiterKind::FullO3;
  double q = 1.4;
  SwitchConfig sw{};

  void validate() const;  // throws std::invalid_argument
};

std::string to_string(LimiterKind kind);
LimiterKind limiter_kind_from(const std::string& token);  // central2|o3|as|limo3|new|comb

// -- ratio-form limiter functions phi(theta) --------------------------------

inline double phi_second_order(double theta) { return 0.5 * (1.0 + theta); }

inline double phi_o3(double theta) { return (2.0 + theta) / 3.0; }

/// Double-logarithmic limiter with p = 2|theta|^q / (1 + |theta|^{2q}).
/// The removable singularity at p = 1 (|theta| = 1) is replaced by its series
/// limit phi_o3(theta) inside |p - 1| < 1e-4; p underflowing to 0 returns 0.
double phi_as(double theta, double q);

double phi_limo3(double theta);
double phi_new(double theta);

// -- two-parameter framework -------------------------------------------------

/// Ratio-form limiter lifted to the two-parameter framework:
/// phi(minus/plus) * plus, with a zero-slope guard
/// |plus| <= 1e-14 * max(1, |minus|) returning 0.
template <class Phi>
double two_param(Phi&& phi, SlopePair s) {
  if (std::abs(s.plus) <= 1e-14 * std::max(1.0, std::abs(s.minus))) return 0.0;
  return phi(s.minus / s.plus) * s.plus;
}

/// Full third-order reconstruction slope (2 delta_+ + delta_-)/3.
/// No division; defined for all inputs including zero slopes.
inline double tilde_phi_o3(SlopePair s) { return (2.0 * s.plus + s.minus) / 3.0; }

/// Switch function: ||(delta_-, delta_+)|| / (c * alpha * dx^2).
/// alpha = 0 classifies any nonzero slope as non-smooth (returns +inf), and a
/// zero slope vector as smooth (returns 0).
double eta(SlopePair s, const SwitchConfig& cfg, double dx);

/// Combined limiter: full third order where eta < 1-eps, the corrected
/// limiter where eta > 1+eps, linear blend in between.
double tilde_phi_comb(SlopePair s, const SwitchConfig& cfg, double dx);

/// Evaluate the configured limiter in the two-parameter framework.
double apply_limiter(const LimiterSpec& spec, SlopePair s, double dx);

}  // namespace fvlim
