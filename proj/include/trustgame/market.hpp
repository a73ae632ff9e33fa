#pragma once
// Seeded agent-based marketplace: sellers with fixed strategies list one or
// more identities, buyers pick by price or trust weight, per-round feedback
// aggregates into a single outcome per identity, and the configured update
// rule moves each trust score. Runs are deterministic for a given config.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "trustgame/trust.hpp"
#include "trustgame/utility.hpp"

namespace trustgame {

enum class BuyerPolicy { price_first, trust_proportional };

inline const char* to_label(BuyerPolicy p) {
  return p == BuyerPolicy::price_first ? "price_first" : "trust_proportional";
}

// ---------------------------------------------------------------------------
// Seller strategies

struct HonestStrategy {
  friend bool operator==(const HonestStrategy&, const HonestStrategy&) = default;
};

struct AlwaysDefectStrategy {
  friend bool operator==(const AlwaysDefectStrategy&, const AlwaysDefectStrategy&) = default;
};

/// Cooperates for honest_rounds rounds to build a record, then defects.
struct LagStrategy {
  int honest_rounds = 10;
  friend bool operator==(const LagStrategy&, const LagStrategy&) = default;
};

/// Defects every round and swaps to a fresh identity after each run of
/// defect_rounds consecutive defections, washing the damaged record.
struct ReEntryStrategy {
  int defect_rounds = 3;
  friend bool operator==(const ReEntryStrategy&, const ReEntryStrategy&) = default;
};

/// Lists identity_count parallel identities, all behaving honestly, to
/// multiply market presence beyond what one record would earn.
struct SybilStrategy {
  int identity_count = 3;
  friend bool operator==(const SybilStrategy&, const SybilStrategy&) = default;
};

/// Cooperates on cheap transactions and defects once the round's
/// transaction cost exceeds cost_threshold.
struct ImbalanceStrategy {
  double cost_threshold = 5.0;
  friend bool operator==(const ImbalanceStrategy&, const ImbalanceStrategy&) = default;
};

using BasicStrategy =
    std::variant<HonestStrategy, AlwaysDefectStrategy, LagStrategy,
                 ReEntryStrategy, SybilStrategy, ImbalanceStrategy>;

/// Conjunction of single-seller tactics: the composite defects only in
/// rounds where every action-bearing component would defect (so
/// lag + re_entry cooperates through the lag window, then runs
/// defect-and-reset cycles). Identity structure and reset directives are
/// taken from sybil / re_entry components.
struct MultiTacticStrategy {
  std::vector<BasicStrategy> components;
  friend bool operator==(const MultiTacticStrategy&, const MultiTacticStrategy&) = default;
};

/// Coalition members sell honestly while injecting fake cooperate-reports
/// about fellow members (one Bernoulli(fake_rate) chance per ordered pair
/// per round).
struct BallotStuffingStrategy {
  std::vector<int> coalition;  // seller indices, may include self
  double fake_rate = 0.5;
  friend bool operator==(const BallotStuffingStrategy&, const BallotStuffingStrategy&) = default;
};

/// Coalition members sell honestly while injecting fake defect-reports
/// against every seller outside the coalition (Bernoulli(target_rate) each
/// per round).
struct BadMouthingStrategy {
  std::vector<int> coalition;
  double target_rate = 0.5;
  friend bool operator==(const BadMouthingStrategy&, const BadMouthingStrategy&) = default;
};

using StrategyKind =
    std::variant<HonestStrategy, AlwaysDefectStrategy, LagStrategy,
                 ReEntryStrategy, SybilStrategy, ImbalanceStrategy,
                 MultiTacticStrategy, BallotStuffingStrategy,
                 BadMouthingStrategy>;

namespace detail {
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_coalition(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(ids[i]);
  }
  return out;
}
}  // namespace detail

inline std::string format_strategy(const BasicStrategy& s) {
  struct V {
    std::string operator()(const HonestStrategy&) const { return "honest"; }
    std::string operator()(const AlwaysDefectStrategy&) const { return "always_defect"; }
    std::string operator()(const LagStrategy& l) const {
      return "lag:" + std::to_string(l.honest_rounds);
    }
    std::string operator()(const ReEntryStrategy& r) const {
      return "re_entry:" + std::to_string(r.defect_rounds);
    }
    std::string operator()(const SybilStrategy& s) const {
      return "sybil:" + std::to_string(s.identity_count);
    }
    std::string operator()(const ImbalanceStrategy& i) const {
      return "imbalance:" + detail::format_double(i.cost_threshold);
    }
  };
  return std::visit(V{}, s);
}

inline std::string format_strategy(const StrategyKind& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MultiTacticStrategy>) {
          std::string out = "multi_tactic:";
          for (std::size_t i = 0; i < v.components.size(); ++i) {
            if (i) out += '+';
            out += format_strategy(v.components[i]);
          }
          return out;
        } else if constexpr (std::is_same_v<T, BallotStuffingStrategy>) {
          return "ballot_stuffing:fake_rate=" + detail::format_double(v.fake_rate) +
                 ",coalition=" + detail::format_coalition(v.coalition);
        } else if constexpr (std::is_same_v<T, BadMouthingStrategy>) {
          return "bad_mouthing:target_rate=" + detail::format_double(v.target_rate) +
                 ",coalition=" + detail::format_coalition(v.coalition);
        } else {
          return format_strategy(BasicStrategy(v));
        }
      },
      s);
}

// ---------------------------------------------------------------------------
// Configuration

struct SellerSpec {
  StrategyKind strategy = HonestStrategy{};
  friend bool operator==(const SellerSpec&, const SellerSpec&) = default;
};

struct MarketConfig {
  int rounds = 200;
  int buyers_per_round = 5;
  BuyerPolicy buyer_policy = BuyerPolicy::trust_proportional;
  TrustVariant trust_variant = TrustVariant::f1;
  double feedback_threshold = 0.5;  // cooperate-report share needed for a positive period
  std::uint64_t rng_seed = 1;
  double price_honest = 3.0;
  double price_defect = 2.0;
  double margin_honest = 1.0;   // net profit per honest unit
  double margin_defect = 1.2;   // net profit per defective unit (cost saving included)
  double cost_cheap = 1.0;      // two-point transaction cost distribution
  double cost_expensive = 10.0;
  double cost_expensive_prob = 0.2;
  double reference_cost = 2.8;  // community norm used by the extended rule
  TrustParams trust;
  UtilityParams utility;
  std::vector<SellerSpec> sellers;

  friend bool operator==(const MarketConfig&, const MarketConfig&) = default;

  void validate() const;
};

// ---------------------------------------------------------------------------
// Runtime state

/// One seller slot for the whole run. persistent_id survives identity resets.
struct SellerAgent {
  int persistent_id = 0;
  StrategyKind strategy = HonestStrategy{};
  std::vector<TrustState> identities;            // one unless sybil
  std::vector<std::uint64_t> identity_history;   // every identity id ever used
  double cumulative_revenue = 0.0;               // literal prices
  double cumulative_profit = 0.0;                // margin-based net revenue
  int consecutive_defections = 0;
  int resets = 0;
};

/// One buyer (or faked) report about a seller identity's period.
struct FeedbackEvent {
  int reporter = 0;
  std::uint64_t subject_identity = 0;
  Action reported_action = Action::cooperate;
  double transaction_cost = 1.0;
  bool genuine = true;
};

/// Majority vote over a period's reports: cooperate when the cooperate share
/// reaches the threshold. Empty report sets yield no update signal.
inline std::optional<Action> aggregate_feedback(
    const std::vector<FeedbackEvent>& events, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("feedback threshold must be in (0, 1]");
  }
  if (events.empty()) return std::nullopt;
  std::size_t cooperates = 0;
  for (const auto& e : events) {
    if (e.reported_action == Action::cooperate) ++cooperates;
  }
  const double share =
      static_cast<double>(cooperates) / static_cast<double>(events.size());
  return share >= threshold ? Action::cooperate : Action::defect;
}

/// What a seller does this round.
struct Decision {
  Action action = Action::cooperate;
  double price = 0.0;
  bool reset_after = false;  // swap to a fresh identity once the round closes
};

namespace detail {

struct ComponentVote {
  bool action_bearing = true;
  bool defect = false;
};

inline ComponentVote component_vote(const BasicStrategy& s, int round,
                                    double round_cost) {
  struct V {
    int round;
    double cost;
    ComponentVote operator()(const HonestStrategy&) const { return {true, false}; }
    ComponentVote operator()(const AlwaysDefectStrategy&) const { return {true, true}; }
    ComponentVote operator()(const LagStrategy& l) const {
      return {true, round >= l.honest_rounds};
    }
    ComponentVote operator()(const ReEntryStrategy&) const { return {true, true}; }
    ComponentVote operator()(const SybilStrategy&) const { return {false, false}; }
    ComponentVote operator()(const ImbalanceStrategy& i) const {
      return {true, cost > i.cost_threshold};
    }
  };
  return std::visit(V{round, round_cost}, s);
}

inline bool reset_due(const BasicStrategy& s, const SellerAgent& agent,
                      bool defected_now) {
  if (const auto* r = std::get_if<ReEntryStrategy>(&s)) {
    return defected_now && agent.consecutive_defections + 1 >= r->defect_rounds;
  }
  return false;
}

}  // namespace detail

/// Resolves a seller's action, listing price and reset directive for one
/// round. Pure: reads the agent and the round context only.
inline Decision decide_action(const SellerAgent& agent, int round,
                              double round_cost, const MarketConfig& cfg) {
  std::vector<BasicStrategy> components;
  if (const auto* m = std::get_if<MultiTacticStrategy>(&agent.strategy)) {
    components = m->components;
  } else if (std::holds_alternative<BallotStuffingStrategy>(agent.strategy) ||
             std::holds_alternative<BadMouthingStrategy>(agent.strategy)) {
    components.push_back(HonestStrategy{});  // coalition attacks sell honestly
  } else {
    components.push_back(std::visit(
        [](const auto& s) -> BasicStrategy {
          if constexpr (std::is_constructible_v<BasicStrategy, decltype(s)>) {
            return s;
          } else {
            return HonestStrategy{};  // unreachable: coalitions handled above
          }
        },
        agent.strategy));
  }

  bool any_action_bearing = false;
  bool all_defect = true;
  for (const auto& c : components) {
    const auto vote = detail::component_vote(c, round, round_cost);
    if (vote.action_bearing) {
      any_action_bearing = true;
      all_defect = all_defect && vote.defect;
    }
  }
  Decision d;
  d.action = (any_action_bearing && all_defect) ? Action::defect
                                                : Action::cooperate;
  d.price = d.action == Action::cooperate ? cfg.price_honest : cfg.price_defect;
  const bool defected_now = d.action == Action::defect;
  for (const auto& c : components) {
    d.reset_after = d.reset_after || detail::reset_due(c, agent, defected_now);
  }
  return d;
}

/// One storefront visible to buyers this round.
struct Listing {
  int agent = 0;
  int identity_slot = 0;
  double price = 0.0;
  TrustValue trust{};
};

namespace detail {
inline double canonical_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}
}  // namespace detail

/// Picks the listing one buyer purchases from. price_first restricts to the
/// cheapest listings and weighs those by trust; trust_proportional weighs all
/// listings by trust. All-zero weights fall back to a uniform pick.
inline std::size_t buyer_select(const std::vector<Listing>& listings,
                                BuyerPolicy policy, std::mt19937_64& rng) {
  if (listings.empty()) {
    throw std::invalid_argument("buyer_select needs at least one listing");
  }
  std::vector<std::size_t> candidates;
  if (policy == BuyerPolicy::price_first) {
    double min_price = listings[0].price;
    for (const auto& l : listings) min_price = std::min(min_price, l.price);
    for (std::size_t i = 0; i < listings.size(); ++i) {
      if (listings[i].price == min_price) candidates.push_back(i);
    }
  } else {
    candidates.resize(listings.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  }
  double total = 0.0;
  for (std::size_t i : candidates) total += selection_weight(listings[i].trust);
  const double u = detail::canonical_unit(rng);
  if (total <= 0.0) {
    const auto pick = static_cast<std::size_t>(
        u * static_cast<double>(candidates.size()));
    return candidates[std::min(pick, candidates.size() - 1)];
  }
  double cursor = u * total;
  for (std::size_t i : candidates) {
    cursor -= selection_weight(listings[i].trust);
    if (cursor < 0.0) return i;
  }
  return candidates.back();
}

// ---------------------------------------------------------------------------
// Trace

struct TraceRow {
  int round = 0;
  int persistent_id = 0;
  std::uint64_t identity_id = 0;
  Action action = Action::cooperate;
  double price = 0.0;
  int units_sold = 0;
  double trust = 0.0;  // post-update score
  std::uint64_t lifetime = 0;
  double revenue = 0.0;  // units * price this round
};

struct SellerSummary {
  int persistent_id = 0;
  std::string strategy;
  double cumulative_revenue = 0.0;
  double cumulative_profit = 0.0;
  double final_trust = 0.0;
  std::uint64_t final_lifetime = 0;
  int resets = 0;
};

struct SimulationTrace {
  MarketConfig config;
  std::vector<TraceRow> rows;
  std::vector<SellerSummary> summary;
};

// ---------------------------------------------------------------------------
// Simulation

inline void MarketConfig::validate() const {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (buyers_per_round < 1) {
    throw std::invalid_argument("buyers_per_round must be >= 1");
  }
  if (!(feedback_threshold > 0.0 && feedback_threshold <= 1.0)) {
    throw std::invalid_argument("feedback_threshold must be in (0, 1]");
  }
  if (!(price_honest > 0.0) || !(price_defect > 0.0)) {
    throw std::invalid_argument("prices must be > 0");
  }
  if (!(margin_honest >= 0.0) || !(margin_defect >= 0.0)) {
    throw std::invalid_argument("margins must be >= 0");
  }
  if (!(cost_cheap > 0.0) || !(cost_expensive > 0.0)) {
    throw std::invalid_argument("transaction costs must be > 0");
  }
  if (!(cost_expensive_prob >= 0.0 && cost_expensive_prob <= 1.0)) {
    throw std::invalid_argument("cost_expensive_prob must be in [0, 1]");
  }
  if (!(reference_cost > 0.0)) {
    throw std::invalid_argument("reference_cost must be > 0");
  }
  trust.validate();
  utility.validate();
  if (sellers.empty()) throw std::invalid_argument("at least one seller is required");
  const int n = static_cast<int>(sellers.size());
  for (const auto& spec : sellers) {
    struct V {
      int n;
      void check_coalition(const std::vector<int>& ids) const {
        for (int id : ids) {
          if (id < 0 || id >= n) {
            throw std::invalid_argument("coalition seller index out of range");
          }
        }
      }
      void operator()(const HonestStrategy&) const {}
      void operator()(const AlwaysDefectStrategy&) const {}
      void operator()(const LagStrategy& l) const {
        if (l.honest_rounds < 0) {
          throw std::invalid_argument("lag honest_rounds must be >= 0");
        }
      }
      void operator()(const ReEntryStrategy& r) const {
        if (r.defect_rounds < 1) {
          throw std::invalid_argument("re_entry defect_rounds must be >= 1");
        }
      }
      void operator()(const SybilStrategy& s) const {
        if (s.identity_count < 1) {
          throw std::invalid_argument("sybil identity_count must be >= 1");
        }
      }
      void operator()(const ImbalanceStrategy& i) const {
        if (!(i.cost_threshold >= 0.0)) {
          throw std::invalid_argument("imbalance cost_threshold must be >= 0");
        }
      }
      void operator()(const MultiTacticStrategy& m) const {
        if (m.components.empty()) {
          throw std::invalid_argument("multi_tactic needs at least one component");
        }
        for (const auto& c : m.components) std::visit(*this, c);
      }
      void operator()(const BallotStuffingStrategy& b) const {
        if (!(b.fake_rate >= 0.0 && b.fake_rate <= 1.0)) {
          throw std::invalid_argument("ballot_stuffing fake_rate must be in [0, 1]");
        }
        check_coalition(b.coalition);
      }
      void operator()(const BadMouthingStrategy& b) const {
        if (!(b.target_rate >= 0.0 && b.target_rate <= 1.0)) {
          throw std::invalid_argument("bad_mouthing target_rate must be in [0, 1]");
        }
        check_coalition(b.coalition);
      }
    };
    std::visit(V{n}, spec.strategy);
  }
}

class MarketSimulation {
 public:
  explicit MarketSimulation(MarketConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    rng_.seed(cfg_.rng_seed);
    agents_.reserve(cfg_.sellers.size());
    for (std::size_t i = 0; i < cfg_.sellers.size(); ++i) {
      SellerAgent a;
      a.persistent_id = static_cast<int>(i);
      a.strategy = cfg_.sellers[i].strategy;
      int identity_count = 1;
      if (const auto* s = std::get_if<SybilStrategy>(&a.strategy)) {
        identity_count = s->identity_count;
      } else if (const auto* m = std::get_if<MultiTacticStrategy>(&a.strategy)) {
        for (const auto& c : m->components) {
          if (const auto* cs = std::get_if<SybilStrategy>(&c)) {
            identity_count = std::max(identity_count, cs->identity_count);
          }
        }
      }
      for (int k = 0; k < identity_count; ++k) {
        a.identities.push_back(TrustState::newcomer(next_identity_id_++));
        a.identity_history.push_back(a.identities.back().identity_id);
      }
      agents_.push_back(std::move(a));
    }
  }

  const MarketConfig& config() const { return cfg_; }
  const std::vector<SellerAgent>& agents() const { return agents_; }
  const std::vector<TraceRow>& rows() const { return rows_; }
  int round() const { return round_; }

  /// Advances one round: decisions, purchases, feedback, trust updates,
  /// then identity resets.
  void step() {
    const auto n = agents_.size();
    std::vector<double> costs(n);
    for (std::size_t i = 0; i < n; ++i) {
      costs[i] = detail::canonical_unit(rng_) < cfg_.cost_expensive_prob
                     ? cfg_.cost_expensive
                     : cfg_.cost_cheap;
    }

    std::vector<Decision> decisions(n);
    for (std::size_t i = 0; i < n; ++i) {
      decisions[i] = decide_action(agents_[i], round_, costs[i], cfg_);
    }

    std::vector<Listing> listings;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < agents_[i].identities.size(); ++k) {
        listings.push_back({static_cast<int>(i), static_cast<int>(k),
                            decisions[i].price, agents_[i].identities[k].trust});
      }
    }

    std::vector<int> units(listings.size(), 0);
    std::vector<FeedbackEvent> events;
    for (int b = 0; b < cfg_.buyers_per_round; ++b) {
      const auto pick = buyer_select(listings, cfg_.buyer_policy, rng_);
      units[pick] += 1;
      const auto seller = static_cast<std::size_t>(listings[pick].agent);
      const auto& identity =
          agents_[seller].identities[static_cast<std::size_t>(listings[pick].identity_slot)];
      events.push_back({/*reporter=*/b, identity.identity_id,
                        decisions[seller].action, costs[seller],
                        /*genuine=*/true});
    }
    inject_fakes(costs, events);

    // One aggregated outcome per identity per round; silent identities
    // keep their score and do not age.
    for (std::size_t l = 0; l < listings.size(); ++l) {
      auto& agent = agents_[static_cast<std::size_t>(listings[l].agent)];
      auto& identity =
          agent.identities[static_cast<std::size_t>(listings[l].identity_slot)];
      std::vector<FeedbackEvent> mine;
      for (const auto& e : events) {
        if (e.subject_identity == identity.identity_id) mine.push_back(e);
      }
      const auto alpha = aggregate_feedback(mine, cfg_.feedback_threshold);
      if (alpha.has_value()) {
        const auto reported = static_cast<std::uint64_t>(mine.size());
        switch (cfg_.trust_variant) {
          case TrustVariant::f1:
            identity = update_f1(identity, *alpha, cfg_.trust, reported);
            break;
          case TrustVariant::f2:
            identity = update_f2(identity, *alpha, cfg_.trust, reported);
            break;
          case TrustVariant::extended: {
            TransactionFeatures f;
            f.transaction_cost = costs[static_cast<std::size_t>(listings[l].agent)];
            f.reference_cost = cfg_.reference_cost;
            identity = update_extended(identity, *alpha, f, cfg_.trust, reported);
            break;
          }
        }
      }

      const auto& d = decisions[static_cast<std::size_t>(listings[l].agent)];
      const double revenue = units[l] * d.price;
      const double margin =
          d.action == Action::cooperate ? cfg_.margin_honest : cfg_.margin_defect;
      agent.cumulative_revenue += revenue;
      agent.cumulative_profit += units[l] * margin;

      rows_.push_back({round_, agent.persistent_id, identity.identity_id,
                       d.action, d.price, units[l], identity.trust.value(),
                       identity.lifetime, revenue});
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (decisions[i].action == Action::defect) {
        agents_[i].consecutive_defections += 1;
      } else {
        agents_[i].consecutive_defections = 0;
      }
    }
    // Resets apply last: the fresh identity first appears next round.
    for (std::size_t i = 0; i < n; ++i) {
      if (decisions[i].reset_after) {
        for (auto& identity : agents_[i].identities) {
          identity = TrustState::newcomer(next_identity_id_++);
          agents_[i].identity_history.push_back(identity.identity_id);
        }
        agents_[i].consecutive_defections = 0;
        agents_[i].resets += 1;
      }
    }
    ++round_;
  }

  SimulationTrace finish() {
    SimulationTrace trace;
    trace.config = cfg_;
    trace.rows = rows_;
    for (const auto& a : agents_) {
      trace.summary.push_back({a.persistent_id, format_strategy(a.strategy),
                               a.cumulative_revenue, a.cumulative_profit,
                               a.identities.front().trust.value(),
                               a.identities.front().lifetime, a.resets});
    }
    return trace;
  }

 private:
  void inject_fakes(const std::vector<double>& costs,
                    std::vector<FeedbackEvent>& events) {
    for (std::size_t i = 0; i < agents_.size(); ++i) {
      if (const auto* b = std::get_if<BallotStuffingStrategy>(&agents_[i].strategy)) {
        for (int member : b->coalition) {
          if (member == static_cast<int>(i)) continue;
          const bool fire = detail::canonical_unit(rng_) < b->fake_rate;
          if (!fire) continue;
          const auto& subject = agents_[static_cast<std::size_t>(member)];
          events.push_back({static_cast<int>(i),
                            subject.identities.front().identity_id,
                            Action::cooperate, costs[static_cast<std::size_t>(member)],
                            /*genuine=*/false});
        }
      } else if (const auto* b =
                     std::get_if<BadMouthingStrategy>(&agents_[i].strategy)) {
        for (std::size_t j = 0; j < agents_.size(); ++j) {
          const bool in_coalition =
              std::find(b->coalition.begin(), b->coalition.end(),
                        static_cast<int>(j)) != b->coalition.end();
          if (in_coalition || j == i) continue;
          const bool fire = detail::canonical_unit(rng_) < b->target_rate;
          if (!fire) continue;
          events.push_back({static_cast<int>(i),
                            agents_[j].identities.front().identity_id,
                            Action::defect, costs[j], /*genuine=*/false});
        }
      }
    }
  }

  MarketConfig cfg_;
  std::vector<SellerAgent> agents_;
  std::vector<TraceRow> rows_;
  std::mt19937_64 rng_;
  std::uint64_t next_identity_id_ = 1;
  int round_ = 0;
};

/// Runs the configured number of rounds and returns the full trace.
inline SimulationTrace run(const MarketConfig& cfg) {
  MarketSimulation sim(cfg);
  for (int r = 0; r < cfg.rounds; ++r) sim.step();
  return sim.finish();
}

// ---------------------------------------------------------------------------
// Serialization

inline constexpr const char* kTraceFormatVersion = "trustgame-trace v1";

/// One row per identity per round, stable byte-for-byte across runs of the
/// same config and seed.
inline void write_trace_csv(std::ostream& os, const SimulationTrace& trace) {
  os << "# " << kTraceFormatVersion << "\n";
  os << "round,persistent_id,identity_id,action,price,units_sold,trust,"
        "lifetime,revenue\n";
  char buf[160];
  for (const auto& r : trace.rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%llu,%s,%.6f,%d,%.9f,%llu,%.6f\n",
                  r.round, r.persistent_id,
                  static_cast<unsigned long long>(r.identity_id),
                  to_label(r.action), r.price, r.units_sold, r.trust,
                  static_cast<unsigned long long>(r.lifetime), r.revenue);
    os << buf;
  }
}

/// Per-seller totals in a fixed, diff-friendly layout.
inline void write_summary(std::ostream& os, const SimulationTrace& trace) {
  os << "# trustgame-summary v1\n";
  char buf[256];
  for (const auto& s : trace.summary) {
    std::snprintf(buf, sizeof(buf),
                  "seller %d strategy=%s revenue=%.6f profit=%.6f "
                  "final_trust=%.9f final_lifetime=%llu resets=%d\n",
                  s.persistent_id, s.strategy.c_str(), s.cumulative_revenue,
                  s.cumulative_profit, s.final_trust,
                  static_cast<unsigned long long>(s.final_lifetime), s.resets);
    os << buf;
  }
}

}  // namespace trustgame
