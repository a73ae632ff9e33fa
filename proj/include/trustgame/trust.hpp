#pragma once
// Bounded trust scores for repeated seller/buyer markets. Newcomers start at
// zero, cooperation earns slow gains, defection draws faster penalties, and an
// optional seniority reward accrues with market lifetime.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace trustgame {

enum class Action { cooperate = 0, defect = 1 };

inline const char* to_label(Action a) {
  return a == Action::cooperate ? "C" : "D";
}

/// Trust score constrained to [-1, +1].
class TrustValue {
 public:
  static constexpr double min_value = -1.0;
  static constexpr double max_value = +1.0;

  constexpr TrustValue() = default;

  /// Throws std::invalid_argument when v is NaN or outside [-1, +1].
  explicit TrustValue(double v) : value_(v) {
    if (!(v >= min_value && v <= max_value)) {
      throw std::invalid_argument("trust value outside [-1, +1]");
    }
  }

  /// Builds from a raw score, clamping into range instead of rejecting.
  static TrustValue clamped(double v) {
    TrustValue t;
    t.value_ = std::clamp(v, min_value, max_value);
    return t;
  }

  constexpr double value() const { return value_; }

  friend constexpr bool operator==(TrustValue a, TrustValue b) {
    return a.value_ == b.value_;
  }

 private:
  double value_ = 0.0;  // newcomers start neutral
};

/// Tunables for the per-period trust adjustment curves.
///
/// The reward and penalty magnitudes depend on the current score x:
///
///   reward  mu(x):   ramps 0 -> eta across [-1, eps-1], holds eta up to
///                    -0.5, holds theta up to 1-eps, then tapers linearly
///                    to 0 at +1 so gains vanish at the ceiling.
///   penalty mu'(x):  kappa everywhere above the floor zone; exactly 0 for
///                    x <= eps-1 so a ruined score cannot leave the range.
///
/// eta <= theta <= kappa encodes slow-to-gain / fast-to-lose.
struct TrustParams {
  double eta = 0.01;     // reward while rebuilding from a bad record
  double theta = 0.05;   // reward in the ordinary operating range
  double kappa = 0.09;   // penalty for a defective period
  double epsilon = 0.1;  // width of the boundary zones
  double mu_max = 0.1;   // cap on any single adjustment term
  double rho = 0.01;     // seniority reward per unit of lifetime
  int recovery_steps_k = 5;    // periods to rebuild forfeited seniority
  int activity_threshold = 1;  // transactions per period required to age
  std::uint64_t saturation_n0 = 20;    // transactions at which rewards reach full scale
  double high_expectancy_factor = 2.0;  // extra penalty multiplier near the ceiling

  friend bool operator==(const TrustParams&, const TrustParams&) = default;

  /// Throws std::invalid_argument on any out-of-range setting.
  void validate() const {
    if (!(0.0 <= eta && eta <= theta && theta <= kappa && kappa <= mu_max)) {
      throw std::invalid_argument("trust params need 0 <= eta <= theta <= kappa <= mu_max");
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw std::invalid_argument("trust params need epsilon in (0, 1)");
    }
    if (!(mu_max > 0.0)) {
      throw std::invalid_argument("trust params need mu_max > 0");
    }
    if (!(rho >= 0.0)) {
      throw std::invalid_argument("trust params need rho >= 0");
    }
    if (recovery_steps_k < 1) {
      throw std::invalid_argument("trust params need recovery_steps_k >= 1");
    }
    if (activity_threshold < 1) {
      throw std::invalid_argument("trust params need activity_threshold >= 1");
    }
    if (!(high_expectancy_factor >= 1.0)) {
      throw std::invalid_argument("trust params need high_expectancy_factor >= 1");
    }
  }
};

/// One market identity: its score plus the counters the update rules read.
struct TrustState {
  TrustValue trust{};
  std::uint64_t lifetime = 0;            // periods of qualifying activity
  std::uint64_t total_transactions = 0;  // reported transactions to date
  std::uint64_t identity_id = 0;

  static TrustState newcomer(std::uint64_t identity_id) {
    TrustState s;
    s.identity_id = identity_id;
    return s;
  }

  friend bool operator==(const TrustState& a, const TrustState& b) {
    return a.trust == b.trust && a.lifetime == b.lifetime &&
           a.total_transactions == b.total_transactions &&
           a.identity_id == b.identity_id;
  }
};

/// Reward magnitude for a cooperative period at score x. In [0, mu_max].
inline double mu(TrustValue x, const TrustParams& p) {
  p.validate();
  const double t = x.value();
  const double floor_edge = p.epsilon - 1.0;
  const double ceiling_edge = 1.0 - p.epsilon;
  if (t < floor_edge) {
    return p.eta * (t + 1.0) / p.epsilon;  // ramp 0 -> eta
  }
  if (t < -0.5) {
    return p.eta;
  }
  if (t < ceiling_edge) {
    return p.theta;
  }
  return p.theta * (1.0 - t) / p.epsilon;  // taper theta -> 0
}

/// Penalty magnitude for a defective period at score x. In [0, mu_max];
/// exactly 0 in the floor zone x <= eps-1.
inline double mu_prime(TrustValue x, const TrustParams& p) {
  p.validate();
  return x.value() <= p.epsilon - 1.0 ? 0.0 : p.kappa;
}

/// Seniority reward earned per period: rho * lifetime, capped at mu_max.
inline double lifetime_reward(const TrustState& s, const TrustParams& p) {
  return std::min(p.rho * static_cast<double>(s.lifetime), p.mu_max);
}

namespace detail {

inline TrustState advanced(TrustState s, double raw_trust, const TrustParams& p,
                           std::uint64_t transactions_in_period) {
  s.trust = TrustValue::clamped(raw_trust);
  s.total_transactions += transactions_in_period;
  if (transactions_in_period >= static_cast<std::uint64_t>(p.activity_threshold)) {
    s.lifetime += 1;
  }
  return s;
}

}  // namespace detail

/// Memoryless update: one period's aggregate action moves the score by
/// +mu or -mu'. Lifetime and transaction counters advance but do not
/// influence the score.
inline TrustState update_f1(const TrustState& s, Action a, const TrustParams& p,
                            std::uint64_t transactions_in_period = 1) {
  p.validate();
  const double adjustment =
      a == Action::cooperate ? mu(s.trust, p) : -mu_prime(s.trust, p);
  return detail::advanced(s, s.trust.value() + adjustment, p, transactions_in_period);
}

/// Lifetime-aware update: same adjustment as update_f1 plus the capped
/// seniority reward, credited regardless of the action. Reduces to
/// update_f1 exactly when lifetime is 0.
inline TrustState update_f2(const TrustState& s, Action a, const TrustParams& p,
                            std::uint64_t transactions_in_period = 1) {
  p.validate();
  const double adjustment =
      a == Action::cooperate ? mu(s.trust, p) : -mu_prime(s.trust, p);
  const double raw = s.trust.value() + adjustment + lifetime_reward(s, p);
  return detail::advanced(s, raw, p, transactions_in_period);
}

/// Per-transaction context consumed by update_extended.
struct TransactionFeatures {
  double transaction_cost = 1.0;
  double reference_cost = 1.0;  // community norm the cost is judged against

  void validate() const {
    if (!(transaction_cost >= 0.0)) {
      throw std::invalid_argument("transaction_cost must be >= 0");
    }
    if (!(reference_cost > 0.0)) {
      throw std::invalid_argument("reference_cost must be > 0");
    }
  }
};

/// update_f2 with three mitigations layered on the adjustment term:
///   - rewards scale by min(1, n/n0), muting trust farmed through thin
///     transaction histories (n = transactions before this period);
///   - penalties scale by max(1, cost/reference), so cheating on big-ticket
///     transactions costs proportionally more;
///   - penalties additionally scale by high_expectancy_factor once the score
///     sits in the ceiling zone, where buyers expect the most.
/// With n >= n0, cost == reference and trust below the ceiling zone this is
/// exactly update_f2.
inline TrustState update_extended(const TrustState& s, Action a,
                                  const TransactionFeatures& f, const TrustParams& p,
                                  std::uint64_t transactions_in_period = 1) {
  p.validate();
  f.validate();
  if (p.saturation_n0 == 0) {
    throw std::invalid_argument("saturation_n0 must be >= 1");
  }
  double adjustment;
  if (a == Action::cooperate) {
    const double saturation =
        std::min(1.0, static_cast<double>(s.total_transactions) /
                          static_cast<double>(p.saturation_n0));
    adjustment = mu(s.trust, p) * saturation;
  } else {
    double scale = std::max(1.0, f.transaction_cost / f.reference_cost);
    if (s.trust.value() >= 1.0 - p.epsilon) {
      scale *= p.high_expectancy_factor;
    }
    adjustment = -mu_prime(s.trust, p) * scale;
  }
  const double raw = s.trust.value() + adjustment + lifetime_reward(s, p);
  return detail::advanced(s, raw, p, transactions_in_period);
}

}  // namespace trustgame
