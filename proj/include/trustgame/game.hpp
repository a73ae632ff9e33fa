#pragma once
// Finite normal-form games: payoff tensors over the full action product,
// pure-strategy equilibrium enumeration, pure-action dominance, and the
// canonical 2x2 market games used across the toolkit.

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "trustgame/utility.hpp"

namespace trustgame {

/// One action index per player.
using Outcome = std::vector<int>;

/// Payoff tensor over the full Cartesian product of action sets.
class NormalFormGame {
 public:
  /// One entry per player; every player needs at least two actions.
  explicit NormalFormGame(std::vector<int> action_counts)
      : action_counts_(std::move(action_counts)) {
    if (action_counts_.size() < 2) {
      throw std::invalid_argument("a game needs at least two players");
    }
    std::size_t cells = 1;
    for (int n : action_counts_) {
      if (n < 2) {
        throw std::invalid_argument("every player needs at least two actions");
      }
      cells *= static_cast<std::size_t>(n);
    }
    payoffs_.assign(cells * action_counts_.size(), 0.0);
  }

  int players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }

  std::size_t outcome_count() const {
    return payoffs_.size() / action_counts_.size();
  }

  double payoff(const Outcome& o, int player) const {
    return payoffs_[index_of(o) * action_counts_.size() +
                    static_cast<std::size_t>(player)];
  }

  void set_payoff(const Outcome& o, int player, double value) {
    payoffs_[index_of(o) * action_counts_.size() +
             static_cast<std::size_t>(player)] = value;
  }

  /// Outcomes in lexicographic order, player 0 most significant.
  Outcome outcome_at(std::size_t index) const {
    Outcome o(action_counts_.size());
    for (int p = players() - 1; p >= 0; --p) {
      const auto n = static_cast<std::size_t>(action_counts_[p]);
      o[static_cast<std::size_t>(p)] = static_cast<int>(index % n);
      index /= n;
    }
    return o;
  }

  std::size_t index_of(const Outcome& o) const {
    if (o.size() != action_counts_.size()) {
      throw std::invalid_argument("outcome arity does not match player count");
    }
    std::size_t index = 0;
    for (std::size_t p = 0; p < o.size(); ++p) {
      if (o[p] < 0 || o[p] >= action_counts_[p]) {
        throw std::invalid_argument("action index out of range");
      }
      index = index * static_cast<std::size_t>(action_counts_[p]) +
              static_cast<std::size_t>(o[p]);
    }
    return index;
  }

 private:
  std::vector<int> action_counts_;
  std::vector<double> payoffs_;  // outcome-major, player-minor
};

/// Actions of `player` maximizing its payoff with the co-players fixed to
/// `profile` (the player's own slot in `profile` is ignored).
inline std::vector<int> best_responses(const NormalFormGame& g, int player,
                                       Outcome profile) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> out;
  for (int a = 0; a < g.action_counts()[static_cast<std::size_t>(player)]; ++a) {
    profile[static_cast<std::size_t>(player)] = a;
    const double u = g.payoff(profile, player);
    if (u > best) {
      best = u;
      out.assign(1, a);
    } else if (u == best) {
      out.push_back(a);
    }
  }
  return out;
}

/// All outcomes where no player gains from a unilateral deviation.
inline std::vector<Outcome> pure_nash(const NormalFormGame& g) {
  std::vector<Outcome> out;
  for (std::size_t i = 0; i < g.outcome_count(); ++i) {
    Outcome o = g.outcome_at(i);
    bool stable = true;
    for (int p = 0; p < g.players() && stable; ++p) {
      const double here = g.payoff(o, p);
      Outcome probe = o;
      for (int a = 0; a < g.action_counts()[static_cast<std::size_t>(p)]; ++a) {
        probe[static_cast<std::size_t>(p)] = a;
        if (g.payoff(probe, p) > here) {
          stable = false;
          break;
        }
      }
    }
    if (stable) out.push_back(std::move(o));
  }
  return out;
}

enum class Dominance { none, weak, strict };

inline const char* to_label(Dominance d) {
  switch (d) {
    case Dominance::strict: return "strict";
    case Dominance::weak: return "weak";
    default: return "none";
  }
}

/// Whether some other pure action of `player` dominates `action`:
/// strict when it is better against every co-player profile, weak when it is
/// at least as good everywhere (within tie_tolerance) and better somewhere.
inline Dominance classify_dominance(const NormalFormGame& g, int player,
                                    int action, double tie_tolerance = 0.0) {
  if (tie_tolerance < 0.0) {
    throw std::invalid_argument("tie_tolerance must be >= 0");
  }
  Dominance result = Dominance::none;
  const int own_actions = g.action_counts()[static_cast<std::size_t>(player)];
  for (int rival = 0; rival < own_actions; ++rival) {
    if (rival == action) continue;
    bool ge_everywhere = true;
    bool gt_somewhere = false;
    bool gt_everywhere = true;
    for (std::size_t i = 0; i < g.outcome_count(); ++i) {
      Outcome o = g.outcome_at(i);
      if (o[static_cast<std::size_t>(player)] != action) continue;
      const double u_action = g.payoff(o, player);
      o[static_cast<std::size_t>(player)] = rival;
      const double u_rival = g.payoff(o, player);
      if (u_rival > u_action + tie_tolerance) {
        gt_somewhere = true;
      } else {
        gt_everywhere = false;
        if (u_rival + tie_tolerance < u_action) {
          ge_everywhere = false;
          break;
        }
      }
    }
    if (ge_everywhere && gt_everywhere) return Dominance::strict;
    if (ge_everywhere && gt_somewhere) result = Dominance::weak;
  }
  return result;
}

/// Pure equilibria plus the dominance class of every pure action.
struct EquilibriumReport {
  std::vector<Outcome> pure_equilibria;
  std::vector<std::vector<Dominance>> action_dominance;  // [player][action]
};

inline EquilibriumReport analyze(const NormalFormGame& g,
                                 double tie_tolerance = 0.0) {
  EquilibriumReport report;
  report.pure_equilibria = pure_nash(g);
  report.action_dominance.resize(static_cast<std::size_t>(g.players()));
  for (int p = 0; p < g.players(); ++p) {
    auto& row = report.action_dominance[static_cast<std::size_t>(p)];
    for (int a = 0; a < g.action_counts()[static_cast<std::size_t>(p)]; ++a) {
      row.push_back(classify_dominance(g, p, a, tie_tolerance));
    }
  }
  return report;
}

/// Action indices of the 2x2 market games.
inline constexpr int kCooperate = 0;
inline constexpr int kDefect = 1;

/// Classic two-suspect dilemma: years of freedom relative to the light
/// sentence. Mutual silence beats mutual confession, but confessing is
/// strictly dominant.
inline NormalFormGame prisoners_dilemma() {
  NormalFormGame g({2, 2});
  g.set_payoff({kCooperate, kCooperate}, 0, 0.0);
  g.set_payoff({kCooperate, kCooperate}, 1, 0.0);
  g.set_payoff({kCooperate, kDefect}, 0, -2.0);
  g.set_payoff({kCooperate, kDefect}, 1, +1.0);
  g.set_payoff({kDefect, kCooperate}, 0, +1.0);
  g.set_payoff({kDefect, kCooperate}, 1, -2.0);
  g.set_payoff({kDefect, kDefect}, 0, -1.0);
  g.set_payoff({kDefect, kDefect}, 1, -1.0);
  return g;
}

/// Two sellers choosing the honest or the cheap defective version. Each
/// seller's payoff depends only on its own action: trust-weighted revenue,
/// plus the cheating margin when defecting, minus the seniority rebuild cost
/// under the lifetime-aware rules.
inline NormalFormGame sellers_dilemma(TrustVariant variant,
                                      const UtilityParams& p) {
  p.validate();
  const double cooperate = overall_utility(variant, Action::cooperate, p);
  const double defect = overall_utility(variant, Action::defect, p);
  NormalFormGame g({2, 2});
  for (int own = 0; own < 2; ++own) {
    for (int other = 0; other < 2; ++other) {
      const double u = own == kCooperate ? cooperate : defect;
      g.set_payoff({own, other}, 0, u);
      g.set_payoff({other, own}, 1, u);
    }
  }
  return g;
}

inline NormalFormGame sellers_dilemma(TrustVariant variant, double mu,
                                      double sigma, double rho, double lifetime,
                                      double omega, int recovery_steps_k = 5) {
  UtilityParams p;
  p.mu_effective = mu;
  p.sigma = sigma;
  p.rho = rho;
  p.lifetime = lifetime;
  p.omega = omega;
  p.recovery_steps_k = recovery_steps_k;
  return sellers_dilemma(variant, p);
}

inline constexpr const char* kGameFormatVersion = "trustgame-game v1";

/// Plain-text tensor dump: one outcome per row, action indices then one
/// payoff per player. Round-trips exactly through read_game.
inline void write_game(std::ostream& os, const NormalFormGame& g) {
  os << "# " << kGameFormatVersion << "\n";
  os << "players " << g.players() << "\n";
  os << "actions";
  for (int n : g.action_counts()) os << ' ' << n;
  os << "\n";
  char buf[64];
  for (std::size_t i = 0; i < g.outcome_count(); ++i) {
    const Outcome o = g.outcome_at(i);
    for (std::size_t p = 0; p < o.size(); ++p) {
      os << (p == 0 ? "" : " ") << o[p];
    }
    for (int p = 0; p < g.players(); ++p) {
      std::snprintf(buf, sizeof(buf), "%.17g", g.payoff(o, p));
      os << ' ' << buf;
    }
    os << "\n";
  }
}

inline NormalFormGame read_game(std::istream& is) {
  auto fail = [](const std::string& what) {
    throw std::runtime_error("malformed game text: " + what);
  };
  std::string line;
  if (!std::getline(is, line) || line != std::string("# ") + kGameFormatVersion) {
    fail("missing version header");
  }
  std::string keyword;
  int players = 0;
  if (!std::getline(is, line)) fail("missing players line");
  {
    std::istringstream ls(line);
    if (!(ls >> keyword >> players) || keyword != "players" || players < 2) {
      fail("bad players line");
    }
  }
  std::vector<int> counts;
  if (!std::getline(is, line)) fail("missing actions line");
  {
    std::istringstream ls(line);
    if (!(ls >> keyword) || keyword != "actions") fail("bad actions line");
    int n;
    while (ls >> n) counts.push_back(n);
    if (static_cast<int>(counts.size()) != players) {
      fail("actions line does not match player count");
    }
  }
  NormalFormGame g(counts);
  for (std::size_t i = 0; i < g.outcome_count(); ++i) {
    if (!std::getline(is, line)) fail("missing outcome row");
    std::istringstream ls(line);
    Outcome o(counts.size());
    for (auto& a : o) {
      if (!(ls >> a)) fail("short outcome row");
    }
    if (g.index_of(o) != i) fail("outcome rows out of order");
    for (int p = 0; p < players; ++p) {
      double u;
      if (!(ls >> u)) fail("short payoff row");
      g.set_payoff(o, p, u);
    }
  }
  return g;
}

}  // namespace trustgame
