#pragma once
// Per-period seller economics over a trust score: expected revenue scales
// with the score, cheating adds a one-shot margin, and sellers paid for
// seniority forfeit a rebuild cost when they burn an identity.

#include <stdexcept>

#include "trustgame/trust.hpp"

namespace trustgame {

/// Which update rule governs the market.
enum class TrustVariant { f1, f2, extended };

inline const char* to_label(TrustVariant v) {
  switch (v) {
    case TrustVariant::f1: return "f1";
    case TrustVariant::f2: return "f2";
    default: return "extended";
  }
}

/// Inputs of the one-period seller decision problem.
struct UtilityParams {
  double omega = 100.0;      // revenue of a period at full selection weight
  double sigma = 0.01;       // extra margin from shipping the cheap version
  double mu_effective = 0.05;  // per-period trust swing, treated as constant
  double rho = 0.01;         // seniority reward rate
  double lifetime = 1.0;     // seniority at stake
  int recovery_steps_k = 5;  // periods needed to rebuild forfeited seniority
  int delta_rounds = 1;      // cheating streak length in scripted scenarios

  friend bool operator==(const UtilityParams&, const UtilityParams&) = default;

  void validate() const {
    if (!(omega > 0.0)) {
      throw std::invalid_argument("utility params need omega > 0");
    }
    if (!(sigma >= 0.0)) {
      throw std::invalid_argument("utility params need sigma >= 0");
    }
    if (!(mu_effective >= 0.0 && mu_effective < 0.1)) {
      throw std::invalid_argument("utility params need mu_effective in [0, 0.1)");
    }
    if (!(rho >= 0.0)) {
      throw std::invalid_argument("utility params need rho >= 0");
    }
    if (!(lifetime >= 0.0)) {
      throw std::invalid_argument("utility params need lifetime >= 0");
    }
    if (recovery_steps_k < 1) {
      throw std::invalid_argument("utility params need recovery_steps_k >= 1");
    }
    if (delta_rounds < 1) {
      throw std::invalid_argument("utility params need delta_rounds >= 1");
    }
  }
};

/// Probability weight buyers give a seller at score t: (t+1)/2 in [0, 1].
inline double selection_weight(TrustValue t) {
  return (t.value() + 1.0) / 2.0;
}

/// Expected per-period revenue at score t: omega * (t+1)/2.
inline double base_utility(TrustValue t, double omega) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("base_utility needs omega > 0");
  }
  return omega * selection_weight(t);
}

/// One-shot gain of a defective period relative to trust-neutral play:
/// recovers the forfeited reward and adds the cheap-version margin.
inline double external_gain_beta(const UtilityParams& p) {
  p.validate();
  return p.mu_effective + p.sigma;
}

/// Rebuild cost of burning a seniority-paid identity: the reward stream
/// (rho/2) * sum_{j=0..k} (l - j*l/k) forfeited while lifetime climbs back,
/// which closes to (rho*l/2) * (k+1)/2.
inline double future_loss_gamma(const UtilityParams& p) {
  p.validate();
  return (p.rho * p.lifetime / 2.0) *
         (static_cast<double>(p.recovery_steps_k) + 1.0) / 2.0;
}

/// Selection weight of a seniority-paid seller holding steady:
/// ((mu + rho*l) + 1) / 2.
inline double saturated_weight_psi(const UtilityParams& p) {
  p.validate();
  return (p.mu_effective + p.rho * p.lifetime + 1.0) / 2.0;
}

/// Expected per-period utility of one action under the given update rule.
/// The seniority analysis of the extended rule matches f2, so it shares
/// that branch.
inline double overall_utility(TrustVariant v, Action a, const UtilityParams& p) {
  p.validate();
  if (v == TrustVariant::f1) {
    const double cooperate = p.omega * (p.mu_effective + 1.0) / 2.0;
    if (a == Action::cooperate) return cooperate;
    return cooperate + p.omega * p.sigma;
  }
  const double cooperate = p.omega * saturated_weight_psi(p);
  if (a == Action::cooperate) return cooperate;
  return cooperate + p.omega * (p.sigma - future_loss_gamma(p));
}

/// Cooperation is the rational choice exactly when the rebuild cost
/// outweighs the cheating margin.
inline bool cooperation_is_equilibrium(const UtilityParams& p) {
  return future_loss_gamma(p) > p.sigma;
}

}  // namespace trustgame
