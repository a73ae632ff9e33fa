#pragma once
// Evaluation harnesses: score separation between honest and defecting
// cohorts, attack profitability against a same-seed honest twin, scripted
// what-if trust trajectories, and the cooperate/defect equilibrium map.

#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "trustgame/game.hpp"
#include "trustgame/market.hpp"

namespace trustgame {

// ---------------------------------------------------------------------------
// Cohort separation

struct BehavioralRow {
  int round = 0;  // 0 = initial state, r = after round r
  double min_cooperator_trust = 0.0;
  double max_defector_trust = 0.0;
  double margin = 0.0;
};

struct BehavioralReport {
  double threshold = 0.0;
  std::vector<BehavioralRow> rows;
  int first_round_margin_exceeds = -1;  // -1: never crossed
};

/// Tracks how fast the scores of always-honest sellers separate from the
/// scores of always-defecting sellers: margin = min honest - max defector.
/// The trace must contain at least one seller of each cohort.
inline BehavioralReport behavioral_eval(const SimulationTrace& trace,
                                        double margin_threshold = 0.5) {
  std::vector<int> honest, defectors;
  for (std::size_t i = 0; i < trace.config.sellers.size(); ++i) {
    const auto& s = trace.config.sellers[i].strategy;
    if (std::holds_alternative<HonestStrategy>(s)) {
      honest.push_back(static_cast<int>(i));
    } else if (std::holds_alternative<AlwaysDefectStrategy>(s)) {
      defectors.push_back(static_cast<int>(i));
    }
  }
  if (honest.empty()) {
    throw std::invalid_argument("trace has no always-cooperative cohort");
  }
  if (defectors.empty()) {
    throw std::invalid_argument("trace has no always-defecting cohort");
  }

  BehavioralReport report;
  report.threshold = margin_threshold;
  report.rows.push_back({0, 0.0, 0.0, 0.0});  // newcomers start level
  for (int r = 0; r < trace.config.rounds; ++r) {
    double min_c = std::numeric_limits<double>::infinity();
    double max_d = -std::numeric_limits<double>::infinity();
    for (const auto& row : trace.rows) {
      if (row.round != r) continue;
      for (int id : honest) {
        if (row.persistent_id == id) min_c = std::min(min_c, row.trust);
      }
      for (int id : defectors) {
        if (row.persistent_id == id) max_d = std::max(max_d, row.trust);
      }
    }
    report.rows.push_back({r + 1, min_c, max_d, min_c - max_d});
  }
  for (const auto& row : report.rows) {
    if (row.margin > margin_threshold) {
      report.first_round_margin_exceeds = row.round;
      break;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Attack profitability

struct AttackOutcome {
  std::string attack;
  TrustVariant variant = TrustVariant::f1;
  int seeds = 0;
  double mean_delta = 0.0;
  double stddev_delta = std::numeric_limits<double>::quiet_NaN();  // NaN: < 2 seeds
  std::vector<double> deltas;
};

/// Measures what seller 0's strategy is worth: the config is run over
/// num_seeds consecutive seeds against an all-honest twin market with the
/// same seed, and the per-seed delta of seller 0's margin-based profit is
/// aggregated. Positive mean: the attack pays.
inline AttackOutcome adversarial_eval(const MarketConfig& attack_cfg,
                                      int num_seeds,
                                      std::uint64_t base_seed = 1) {
  attack_cfg.validate();
  if (num_seeds < 1) {
    throw std::invalid_argument("adversarial_eval needs num_seeds >= 1");
  }
  MarketConfig twin_cfg = attack_cfg;
  for (auto& s : twin_cfg.sellers) s.strategy = HonestStrategy{};

  AttackOutcome out;
  out.attack = format_strategy(attack_cfg.sellers.front().strategy);
  out.variant = attack_cfg.trust_variant;
  out.seeds = num_seeds;
  for (int s = 0; s < num_seeds; ++s) {
    MarketConfig a = attack_cfg;
    MarketConfig t = twin_cfg;
    a.rng_seed = base_seed + static_cast<std::uint64_t>(s);
    t.rng_seed = a.rng_seed;
    const auto attack_trace = run(a);
    const auto twin_trace = run(t);
    out.deltas.push_back(attack_trace.summary.front().cumulative_profit -
                         twin_trace.summary.front().cumulative_profit);
  }
  double sum = 0.0;
  for (double d : out.deltas) sum += d;
  out.mean_delta = sum / static_cast<double>(num_seeds);
  if (num_seeds >= 2) {
    double ss = 0.0;
    for (double d : out.deltas) ss += (d - out.mean_delta) * (d - out.mean_delta);
    out.stddev_delta = std::sqrt(ss / static_cast<double>(num_seeds - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scripted prediction

enum class ScriptStep { cooperate, defect, re_enter };

inline const char* to_label(ScriptStep s) {
  switch (s) {
    case ScriptStep::cooperate: return "C";
    case ScriptStep::defect: return "D";
    default: return "R";
  }
}

struct PredictionStep {
  TrustState state;
  double utility = 0.0;  // expected per-period revenue at this score
};

/// Replays a hypothetical action script from a starting state under the
/// given update rule. Entry 0 is the starting state; re_enter swaps in a
/// fresh newcomer identity. Pure arithmetic; no randomness.
inline std::vector<PredictionStep> operational_predict(
    const TrustState& start, const std::vector<ScriptStep>& script,
    TrustVariant variant, const TrustParams& tp, double omega = 100.0) {
  tp.validate();
  std::vector<PredictionStep> out;
  TrustState state = start;
  out.push_back({state, base_utility(state.trust, omega)});
  for (const auto step : script) {
    if (step == ScriptStep::re_enter) {
      state = TrustState::newcomer(state.identity_id + 1);
    } else {
      const Action a = step == ScriptStep::cooperate ? Action::cooperate
                                                     : Action::defect;
      switch (variant) {
        case TrustVariant::f1:
          state = update_f1(state, a, tp);
          break;
        case TrustVariant::f2:
          state = update_f2(state, a, tp);
          break;
        case TrustVariant::extended:
          state = update_extended(state, a, TransactionFeatures{}, tp);
          break;
      }
    }
    out.push_back({state, base_utility(state.trust, omega)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equilibrium region map

enum class RegionClass { cooperate, defect, boundary };

inline const char* to_label(RegionClass c) {
  switch (c) {
    case RegionClass::cooperate: return "cooperate";
    case RegionClass::defect: return "defect";
    default: return "boundary";
  }
}

struct SweepPoint {
  double rho_lifetime = 0.0;
  double sigma = 0.0;
  RegionClass region = RegionClass::boundary;
};

struct SweepResult {
  int rho_lifetime_steps = 0;
  int sigma_steps = 0;
  double mu_effective = 0.0;
  double omega = 0.0;
  int recovery_steps_k = 0;
  std::vector<SweepPoint> points;  // rho_lifetime-major, sigma-minor
};

namespace detail {
inline std::vector<double> log_grid(double lo, double hi, int steps) {
  // A degenerate lo == hi axis is allowed down to 0 (constant grid); log
  // spacing itself needs lo > 0.
  if (!(lo >= 0.0) || !(hi >= lo) || (lo == 0.0 && hi > 0.0)) {
    throw std::invalid_argument("sweep grid needs 0 < min <= max (or min == max)");
  }
  if (steps < 1) throw std::invalid_argument("sweep grid needs steps >= 1");
  std::vector<double> out;
  if (steps == 1 || lo == hi) {
    out.assign(static_cast<std::size_t>(steps), lo);
    return out;
  }
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (int i = 0; i < steps; ++i) {
    out.push_back(std::pow(10.0, llo + (lhi - llo) * i / (steps - 1)));
  }
  return out;
}
}  // namespace detail

/// Classifies the lifetime-aware sellers game on a log grid over the
/// seniority stake (rho * lifetime) and the cheating margin sigma. Each cell
/// is labeled by its pure equilibria: all-cooperate, all-defect, or the
/// knife-edge where every outcome is a weak equilibrium.
inline SweepResult equilibrium_sweep(double rl_min, double rl_max,
                                     double sigma_min, double sigma_max,
                                     int rl_steps, int sigma_steps,
                                     double mu_effective = 0.05,
                                     double omega = 100.0,
                                     int recovery_steps_k = 5) {
  const auto rl_grid = detail::log_grid(rl_min, rl_max, rl_steps);
  const auto sg_grid = detail::log_grid(sigma_min, sigma_max, sigma_steps);
  SweepResult out;
  out.rho_lifetime_steps = rl_steps;
  out.sigma_steps = sigma_steps;
  out.mu_effective = mu_effective;
  out.omega = omega;
  out.recovery_steps_k = recovery_steps_k;
  for (double rl : rl_grid) {
    for (double sg : sg_grid) {
      const auto game = sellers_dilemma(TrustVariant::f2, mu_effective, sg,
                                        /*rho=*/rl, /*lifetime=*/1.0, omega,
                                        recovery_steps_k);
      const auto equilibria = pure_nash(game);
      RegionClass region;
      if (equilibria.size() == 4) {
        region = RegionClass::boundary;
      } else if (equilibria.size() == 1 &&
                 equilibria.front() == Outcome{kCooperate, kCooperate}) {
        region = RegionClass::cooperate;
      } else if (equilibria.size() == 1 &&
                 equilibria.front() == Outcome{kDefect, kDefect}) {
        region = RegionClass::defect;
      } else {
        throw std::logic_error("sellers game produced an unexpected equilibrium set");
      }
      out.points.push_back({rl, sg, region});
    }
  }
  return out;
}

inline constexpr const char* kSweepFormatVersion = "trustgame-sweep v1";

inline void write_sweep_csv(std::ostream& os, const SweepResult& sweep) {
  os << "# " << kSweepFormatVersion << "\n";
  os << "rho_lifetime,sigma,region\n";
  char buf[96];
  for (const auto& p : sweep.points) {
    std::snprintf(buf, sizeof(buf), "%.9e,%.9e,%s\n", p.rho_lifetime, p.sigma,
                  to_label(p.region));
    os << buf;
  }
}

}  // namespace trustgame
