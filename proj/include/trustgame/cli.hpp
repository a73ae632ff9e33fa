#pragma once
// Command-line front end: dilemma analysis, marketplace simulation, attack
// profitability tables and equilibrium-region sweeps. Exit codes: 0 success,
// 2 usage error, 3 configuration error, 4 runtime failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trustgame/analysis.hpp"
#include "trustgame/config.hpp"

namespace trustgame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConfig = 3;
inline constexpr int kExitRuntime = 4;

inline constexpr const char* kAttackTableVersion = "trustgame-attacks v1";
inline constexpr const char* kOutDirEnvVar = "TRUSTGAME_OUT_DIR";

/// Output directory used when --out is not given: $TRUSTGAME_OUT_DIR, or the
/// working directory.
inline std::string default_out_dir() {
  const char* env = std::getenv(kOutDirEnvVar);
  return (env != nullptr && *env != '\0') ? env : ".";
}

// ---------------------------------------------------------------------------
// analyze-game

struct AnalyzeGameOptions {
  std::string game = "pd";  // pd | sellers
  std::string variant = "f2";
  double mu = 0.05;
  double sigma = 0.01;
  double rho = 0.01;
  double lifetime = 1.0;
  double omega = 100.0;
  int recovery_steps_k = 5;
  double tie_tolerance = 0.0;
};

namespace detail {

inline const char* action_label(int action) {
  return action == kCooperate ? "cooperate" : "defect";
}

inline const char* dominance_label(Dominance d) {
  switch (d) {
    case Dominance::strict: return "strict";
    case Dominance::weak: return "weak";
    default: return "none";
  }
}

}  // namespace detail

inline int cmd_analyze_game(const AnalyzeGameOptions& opt, std::ostream& out) {
  NormalFormGame game =
      opt.game == "pd"
          ? prisoners_dilemma()
          : sellers_dilemma(detail::parse_trust_variant(opt.variant), opt.mu, opt.sigma,
                            opt.rho, opt.lifetime, opt.omega, opt.recovery_steps_k);
  write_game(out, game);

  const auto report = analyze(game, opt.tie_tolerance);
  out << "pure equilibria: " << report.pure_equilibria.size() << "\n";
  for (const auto& eq : report.pure_equilibria) {
    out << "  (";
    for (std::size_t p = 0; p < eq.size(); ++p) {
      if (p) out << ", ";
      out << detail::action_label(eq[p]);
    }
    out << ")\n";
  }
  out << "dominated actions:\n";
  for (int p = 0; p < game.players(); ++p) {
    out << "  player " << p << ":";
    for (int a = 0; a < game.action_counts()[static_cast<std::size_t>(p)]; ++a) {
      out << " " << detail::action_label(a) << "="
          << detail::dominance_label(
                 report.action_dominance[static_cast<std::size_t>(p)]
                                        [static_cast<std::size_t>(a)]);
    }
    out << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
  std::string config_path;
  std::string out = "";           // "" -> default dir, "-" -> trace to stdout
  bool has_seed_override = false;
  std::uint64_t seed_override = 0;
};

inline int cmd_simulate(const SimulateOptions& opt, std::ostream& out) {
  MarketConfig cfg = load_config_file(opt.config_path);
  if (opt.has_seed_override) cfg.rng_seed = opt.seed_override;
  cfg.validate();
  const SimulationTrace trace = run(cfg);

  if (opt.out == "-") {
    write_trace_csv(out, trace);
    return kExitOk;
  }

  namespace fs = std::filesystem;
  const fs::path dir = opt.out.empty() ? fs::path(default_out_dir()) : fs::path(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir.string() + "'");

  auto emit = [&](const char* name, auto&& writer) {
    const fs::path path = dir / name;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
    writer(f);
    out << "wrote " << path.string() << "\n";
  };
  emit("trace.csv", [&](std::ostream& f) { write_trace_csv(f, trace); });
  emit("summary.txt", [&](std::ostream& f) { write_summary(f, trace); });
  emit("effective-config.txt", [&](std::ostream& f) { write_config(f, cfg); });
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval-attacks

struct AttackSpec {
  std::string name;        // CLI-facing name (hyphenated)
  StrategyKind strategy;
  int extra_colluders = 0;  // additional sellers running the same strategy
};

/// The evaluated battery, in the catalogue order: identity forgery, delayed
/// defection, identity washing, value-imbalanced cheating, combined tactics,
/// and the two coalition feedback attacks.
inline const std::vector<AttackSpec>& attack_battery() {
  static const std::vector<AttackSpec> battery = {
      {"sybil", SybilStrategy{3}, 0},
      {"lag", LagStrategy{10}, 0},
      {"re-entry", ReEntryStrategy{3}, 0},
      {"imbalance", ImbalanceStrategy{5.0}, 0},
      {"multi-tactic", MultiTacticStrategy{{LagStrategy{10}, ReEntryStrategy{3}}}, 0},
      {"ballot-stuffing", BallotStuffingStrategy{{0, 1}, 0.5}, 1},
      {"bad-mouthing", BadMouthingStrategy{{0}, 0.5}, 0},
  };
  return battery;
}

/// Calibration bundled with eval-attacks: slow trust motion (small reward /
/// penalty plateaus and lifetime bonus) keeps scores informative across a
/// 200-round horizon instead of saturating, which is what separates the
/// history-carrying update from the memoryless one under identity washing.
inline MarketConfig attack_eval_defaults() {
  MarketConfig cfg;
  cfg.rounds = 200;
  cfg.buyers_per_round = 5;
  cfg.buyer_policy = BuyerPolicy::trust_proportional;
  cfg.rng_seed = 1;
  cfg.trust.eta = 0.0005;
  cfg.trust.theta = 0.002;
  cfg.trust.kappa = 0.004;
  cfg.trust.rho = 2e-4;
  cfg.sellers = {SellerSpec{HonestStrategy{}}};
  return cfg;
}

/// Prepends the attacker (plus any colluders) to the config's seller roster.
inline MarketConfig make_attack_config(MarketConfig base, const AttackSpec& attack) {
  std::vector<SellerSpec> sellers;
  for (int i = 0; i <= attack.extra_colluders; ++i) {
    sellers.push_back(SellerSpec{attack.strategy});
  }
  sellers.insert(sellers.end(), base.sellers.begin(), base.sellers.end());
  base.sellers = std::move(sellers);
  return base;
}

struct EvalAttacksOptions {
  std::string config_path;       // empty -> attack_eval_defaults()
  std::string attacks = "all";   // comma list or "all"
  std::string variants = "f1,f2";
  int seeds = 30;
  std::uint64_t base_seed = 1;
};

namespace detail {

inline std::vector<AttackSpec> resolve_attacks(const std::string& list) {
  std::vector<AttackSpec> out;
  for (const auto& raw : split(list, ',')) {
    const std::string name = trim(raw);
    if (name == "all") {
      for (const auto& a : attack_battery()) out.push_back(a);
      continue;
    }
    if (name == "honest") {
      out.push_back({"honest", HonestStrategy{}, 0});
      continue;
    }
    bool found = false;
    for (const auto& a : attack_battery()) {
      if (a.name == name) {
        out.push_back(a);
        found = true;
        break;
      }
    }
    if (!found) {
      std::string valid = "honest";
      for (const auto& a : attack_battery()) valid += ", " + a.name;
      throw ConfigError("unknown attack '" + name + "' (valid: all, " + valid + ")");
    }
  }
  if (out.empty()) throw ConfigError("no attacks selected");
  return out;
}

inline std::vector<TrustVariant> resolve_variants(const std::string& list) {
  std::vector<TrustVariant> out;
  for (const auto& raw : split(list, ',')) {
    const std::string name = trim(raw);
    if (name == "all") {
      out.insert(out.end(),
                 {TrustVariant::f1, TrustVariant::f2, TrustVariant::extended});
      continue;
    }
    out.push_back(parse_trust_variant(name));
  }
  if (out.empty()) throw ConfigError("no trust variants selected");
  return out;
}

}  // namespace detail

inline int cmd_eval_attacks(const EvalAttacksOptions& opt, std::ostream& out) {
  MarketConfig base =
      opt.config_path.empty() ? attack_eval_defaults() : load_config_file(opt.config_path);
  if (base.sellers.empty()) base.sellers = {SellerSpec{HonestStrategy{}}};
  const auto attacks = detail::resolve_attacks(opt.attacks);
  const auto variants = detail::resolve_variants(opt.variants);
  if (opt.seeds < 1) throw ConfigError("--seeds must be >= 1");

  out << "# " << kAttackTableVersion << "\n";
  char line[160];
  std::snprintf(line, sizeof(line), "%-16s %-9s %14s %14s %6s\n", "attack", "variant",
                "mean_delta", "stddev", "seeds");
  out << line;
  for (const auto& attack : attacks) {
    for (const auto variant : variants) {
      MarketConfig cfg = make_attack_config(base, attack);
      cfg.trust_variant = variant;
      const AttackOutcome res = adversarial_eval(cfg, opt.seeds, opt.base_seed);
      char stddev[32];
      if (res.seeds < 2) {
        std::snprintf(stddev, sizeof(stddev), "%s", "n/a");
      } else {
        std::snprintf(stddev, sizeof(stddev), "%.6f", res.stddev_delta);
      }
      std::snprintf(line, sizeof(line), "%-16s %-9s %14.6f %14s %6d\n",
                    attack.name.c_str(), to_label(variant), res.mean_delta, stddev,
                    res.seeds);
      out << line;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  double rl_min = 1e-4;
  double rl_max = 1e-1;
  double sigma_min = 1e-4;
  double sigma_max = 1e-1;
  int rl_steps = 50;
  int sigma_steps = 50;
  double mu_effective = 0.05;
  double omega = 100.0;
  int recovery_steps_k = 5;
  std::string out = "";  // "" -> <default dir>/sweep.csv, "-" -> stdout
};

inline int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  const SweepResult sweep = equilibrium_sweep(
      opt.rl_min, opt.rl_max, opt.sigma_min, opt.sigma_max, opt.rl_steps,
      opt.sigma_steps, opt.mu_effective, opt.omega, opt.recovery_steps_k);

  // Agreement of every classified point with the analytic threshold
  // gamma = (rho*lifetime / 2) * (k + 1) / 2 > sigma.
  int classified = 0;
  int boundary = 0;
  int mismatches = 0;
  for (const auto& p : sweep.points) {
    if (p.region == RegionClass::boundary) {
      ++boundary;
      continue;
    }
    ++classified;
    UtilityParams u;
    u.omega = opt.omega;
    u.sigma = p.sigma;
    u.mu_effective = opt.mu_effective;
    u.rho = p.rho_lifetime;
    u.lifetime = 1.0;
    u.recovery_steps_k = opt.recovery_steps_k;
    const bool analytic_coop = future_loss_gamma(u) > p.sigma;
    const bool swept_coop = p.region == RegionClass::cooperate;
    if (analytic_coop != swept_coop) ++mismatches;
  }

  // Fitted boundary: per rho*lifetime column, the geometric midpoint of the
  // cooperate->defect straddle, against the analytic crossing.
  double max_log10_gap = 0.0;
  int fitted_columns = 0;
  for (int i = 0; i < sweep.rho_lifetime_steps; ++i) {
    const SweepPoint* prev = nullptr;
    for (int j = 0; j < sweep.sigma_steps; ++j) {
      const auto& p =
          sweep.points[static_cast<std::size_t>(i) *
                           static_cast<std::size_t>(sweep.sigma_steps) +
                       static_cast<std::size_t>(j)];
      if (prev != nullptr && prev->region == RegionClass::cooperate &&
          p.region == RegionClass::defect) {
        const double fitted = std::sqrt(prev->sigma * p.sigma);
        UtilityParams u;
        u.omega = opt.omega;
        u.sigma = fitted;
        u.mu_effective = opt.mu_effective;
        u.rho = p.rho_lifetime;
        u.lifetime = 1.0;
        u.recovery_steps_k = opt.recovery_steps_k;
        const double analytic = future_loss_gamma(u);
        const double gap = std::fabs(std::log10(fitted / analytic));
        if (gap > max_log10_gap) max_log10_gap = gap;
        ++fitted_columns;
      }
      prev = &p;
    }
  }

  std::ostream& report = (opt.out == "-") ? err : out;
  if (opt.out == "-") {
    write_sweep_csv(out, sweep);
  } else {
    namespace fs = std::filesystem;
    fs::path path;
    if (opt.out.empty()) {
      path = fs::path(default_out_dir()) / "sweep.csv";
    } else {
      path = fs::path(opt.out);
      if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
      }
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
    write_sweep_csv(f, sweep);
    report << "wrote " << path.string() << "\n";
  }

  char buf[256];
  std::snprintf(buf, sizeof(buf), "points %d classified %d boundary %d\n",
                static_cast<int>(sweep.points.size()), classified, boundary);
  report << buf;
  std::snprintf(buf, sizeof(buf),
                "analytic agreement %d/%d non-boundary points match gamma > sigma\n",
                classified - mismatches, classified);
  report << buf;
  if (fitted_columns > 0) {
    const double log_step =
        opt.sigma_steps > 1
            ? std::log10(opt.sigma_max / opt.sigma_min) / (opt.sigma_steps - 1)
            : 0.0;
    std::snprintf(buf, sizeof(buf),
                  "fitted boundary on %d columns, max |log10 gap| to analytic curve "
                  "%.6f (grid step %.6f)\n",
                  fitted_columns, max_log10_gap, log_step);
    report << buf;
  }
  return mismatches == 0 ? kExitOk : kExitRuntime;
}

// ---------------------------------------------------------------------------
// Driver

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{
      "trustgame: trust-update rules, seller's-dilemma analysis, marketplace "
      "simulation, attack profitability and equilibrium-region sweeps"};
  app.require_subcommand(1);

  AnalyzeGameOptions ag;
  auto* analyze_cmd = app.add_subcommand(
      "analyze-game", "Print a game's payoffs, pure equilibria and dominance");
  analyze_cmd->add_option("--game", ag.game, "Game to build: pd or sellers")
      ->required()
      ->check(CLI::IsMember({"pd", "sellers"}));
  analyze_cmd->add_option("--variant", ag.variant, "Trust update rule: f1, f2, extended")
      ->check(CLI::IsMember({"f1", "f2", "extended"}));
  analyze_cmd->add_option("--mu", ag.mu, "Per-period reward at the operating point");
  analyze_cmd->add_option("--sigma", ag.sigma, "One-shot defection gain share");
  analyze_cmd->add_option("--rho", ag.rho, "Lifetime bonus rate");
  analyze_cmd->add_option("--lifetime", ag.lifetime, "Seller lifetime in periods");
  analyze_cmd->add_option("--omega", ag.omega, "Market volume scale");
  analyze_cmd->add_option("--k", ag.recovery_steps_k, "Recovery horizon in periods");
  analyze_cmd->add_option("--tie-tolerance", ag.tie_tolerance,
                          "Payoff tolerance for dominance ties");

  SimulateOptions sim;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Run a marketplace config and write trace files");
  simulate_cmd->add_option("config", sim.config_path, "Config file path")
      ->required()
      ->check(CLI::ExistingFile);
  simulate_cmd->add_option("--out", sim.out,
                           "Output directory, or - for trace on stdout");
  auto* seed_opt =
      simulate_cmd->add_option("--seed", sim.seed_override, "Override the config seed");
  simulate_cmd->footer(
      "Config sections and keys:\n"
      "  [market]  rounds buyers_per_round buyer_policy trust_variant\n"
      "            feedback_threshold rng_seed price_honest price_defect\n"
      "            margin_honest margin_defect cost_cheap cost_expensive\n"
      "            cost_expensive_prob reference_cost\n"
      "  [trust]   eta theta kappa epsilon mu_max rho recovery_steps_k\n"
      "            activity_threshold saturation_n0 high_expectancy_factor\n"
      "  [utility] omega sigma mu_effective rho lifetime recovery_steps_k\n"
      "            delta_rounds\n"
      "  [sellers] seller = honest | always_defect | lag:<n> | re_entry:<n> |\n"
      "            sybil:<n> | imbalance:<cost> | multi_tactic:<a>+<b> |\n"
      "            ballot_stuffing:fake_rate=<p>,coalition=<i|j> |\n"
      "            bad_mouthing:target_rate=<p>,coalition=<i|j>\n"
      "Unset keys keep their defaults; see docs/config.md for semantics.\n"
      "Default output directory: $TRUSTGAME_OUT_DIR, else the working directory.");

  EvalAttacksOptions ev;
  auto* eval_cmd = app.add_subcommand(
      "eval-attacks", "Profitability of attack strategies vs an honest twin");
  eval_cmd->add_option("--config", ev.config_path, "Base market config (optional)")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--attacks", ev.attacks,
                       "Comma list: all, honest, sybil, lag, re-entry, imbalance, "
                       "multi-tactic, ballot-stuffing, bad-mouthing");
  eval_cmd->add_option("--variants", ev.variants, "Comma list: f1, f2, extended, all");
  eval_cmd->add_option("--seeds", ev.seeds, "Seeds per (attack, variant) pair");
  eval_cmd->add_option("--base-seed", ev.base_seed, "First seed");

  SweepOptions sw;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Classify the (rho*lifetime, sigma) plane by pure equilibrium");
  sweep_cmd->add_option("--rl-min", sw.rl_min, "Min rho*lifetime");
  sweep_cmd->add_option("--rl-max", sw.rl_max, "Max rho*lifetime");
  sweep_cmd->add_option("--sigma-min", sw.sigma_min, "Min sigma");
  sweep_cmd->add_option("--sigma-max", sw.sigma_max, "Max sigma");
  sweep_cmd->add_option("--rl-steps", sw.rl_steps, "Grid points along rho*lifetime");
  sweep_cmd->add_option("--sigma-steps", sw.sigma_steps, "Grid points along sigma");
  sweep_cmd->add_option("--mu", sw.mu_effective, "Per-period reward at the operating point");
  sweep_cmd->add_option("--omega", sw.omega, "Market volume scale");
  sweep_cmd->add_option("--k", sw.recovery_steps_k, "Recovery horizon in periods");
  sweep_cmd->add_option("--out", sw.out, "CSV path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze_game(ag, out);
    if (*simulate_cmd) {
      sim.has_seed_override = seed_opt->count() > 0;
      return cmd_simulate(sim, out);
    }
    if (*eval_cmd) return cmd_eval_attacks(ev, out);
    if (*sweep_cmd) return cmd_sweep(sw, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace trustgame
