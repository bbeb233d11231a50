#include "fvlim/limiters.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fvlim {

void SwitchConfig::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("SwitchConfig: alpha must be finite and >= 0");
  }
  if (!(epsilon > 0.0) || !(epsilon <= 0.1)) {
    throw std::invalid_argument("SwitchConfig: epsilon must lie in (0, 0.1]");
  }
}

void LimiterSpec::validate() const {
  if (kind == LimiterKind::ArtebrantSchroll && !(q > 0.0)) {
    throw std::invalid_argument("LimiterSpec: ArtebrantSchroll needs q > 0");
  }
  if (kind == LimiterKind::Combined) sw.validate();
}

std::string to_string(LimiterKind kind) {
  switch (kind) {
    case LimiterKind::SecondOrderCentral: return "central2";
    case LimiterKind::FullO3: return "o3";
    case LimiterKind::ArtebrantSchroll: return "as";
    case LimiterKind::LimO3: return "limo3";
    case LimiterKind::New: return "new";
    case LimiterKind::Combined: return "comb";
  }
  return "?";
}

LimiterKind limiter_kind_from(const std::string& token) {
  if (token == "central2") return LimiterKind::SecondOrderCentral;
  if (token == "o3") return LimiterKind::FullO3;
  if (token == "as") return LimiterKind::ArtebrantSchroll;
  if (token == "limo3") return LimiterKind::LimO3;
  if (token == "new") return LimiterKind::New;
  if (token == "comb") return LimiterKind::Combined;
  throw std::invalid_argument("unknown limiter '" + token + "'");
}

double phi_as(double theta, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("phi_as: q must be > 0");
  // p = 2|theta|^q / (1 + |theta|^{2q}), written as 2/(t + 1/t) so that
  // t -> 0 and t -> inf both give p -> 0 without intermediate inf/inf.
  const double t = std::pow(std::abs(theta), q);
  const double p = (t > 0.0) ? 2.0 / (t + 1.0 / t) : 0.0;
  if (p < 1e-300) return 0.0;  // p log p -> 0 limit
  if (std::abs(p - 1.0) < 1e-4) return phi_o3(theta);  // removable singularity at |theta| = 1
  const double num =
      2.0 * p * ((p * p - 2.0 * p * theta + 1.0) * std::log(p) - (1.0 - theta) * (p * p - 1.0));
  const double den = (p * p - 1.0) * (p - 1.0) * (p - 1.0);
  return num / den;
}

double phi_limo3(double theta) {
  const double o3 = phi_o3(theta);
  const double inner = std::min({2.0 * theta, o3, 1.6});
  return std::max(0.0, std::min(o3, std::max(-0.5 * theta, inner)));
}

double phi_new(double theta) {
  const double o3 = phi_o3(theta);
  const double inner = std::min({2.0 * theta, o3, 1.5});
  return std::max(0.0, std::min(o3, std::max(-theta, inner)));
}

double eta(SlopePair s, const SwitchConfig& cfg, double dx) {
  const double mag = cfg.norm == SlopeNorm::L2
                         ? std::sqrt(s.minus * s.minus + s.plus * s.plus)
                         : std::abs(s.minus) + std::abs(s.plus);
  if (cfg.alpha == 0.0) {
    return mag > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return mag / (cfg.scale() * cfg.alpha * dx * dx);
}

double tilde_phi_comb(SlopePair s, const SwitchConfig& cfg, double dx) {
  const double e = eta(s, cfg, dx);
  if (e < 1.0 - cfg.epsilon) return tilde_phi_o3(s);
  if (e > 1.0 + cfg.epsilon) return two_param(phi_new, s);
  const double w = std::clamp((1.0 + cfg.epsilon - e) / (2.0 * cfg.epsilon), 0.0, 1.0);
  return w * tilde_phi_o3(s) + (1.0 - w) * two_param(phi_new, s);
}

double apply_limiter(const LimiterSpec& spec, SlopePair s, double dx) {
  switch (spec.kind) {
    case LimiterKind::SecondOrderCentral:
      return two_param(phi_second_order, s);
    case LimiterKind::FullO3:
      return tilde_phi_o3(s);
    case LimiterKind::ArtebrantSchroll:
      return two_param([q = spec.q](double th) { return phi_as(th, q); }, s);
    case LimiterKind::LimO3:
      return two_param(phi_limo3, s);
    case LimiterKind::New:
      return two_param(phi_new, s);
    case LimiterKind::Combined:
      return tilde_phi_comb(s, spec.sw, dx);
  }
  throw std::invalid_argument("apply_limiter: unknown limiter kind");
}

}  // namespace fvlim
