#pragma once
// Text configuration for marketplace runs: flat key=value lines grouped
// under [market] / [trust] / [utility] / [sellers] headers. parse and
// serialize are exact inverses, so an echoed config reloads to an equal
// MarketConfig.

#include <cerrno>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "trustgame/market.hpp"

namespace trustgame {

inline constexpr const char* kConfigFormatVersion = "trustgame-config v1";

/// Raised on malformed config text; the message names the offending key
/// or line.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline double to_double(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE)
    throw ConfigError("invalid number for '" + key + "': '" + text + "'");
  return v;
}

inline long long to_ll(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE)
    throw ConfigError("invalid integer for '" + key + "': '" + text + "'");
  return v;
}

inline int to_int(const std::string& text, const std::string& key) {
  long long v = to_ll(text, key);
  if (v < INT_MIN || v > INT_MAX)
    throw ConfigError("integer out of range for '" + key + "': '" + text + "'");
  return static_cast<int>(v);
}

inline std::uint64_t to_u64(const std::string& text, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (end != text.c_str() + text.size() || text.empty() || errno == ERANGE ||
      text.front() == '-')
    throw ConfigError("invalid unsigned integer for '" + key + "': '" + text + "'");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Strategy grammar
//
//   honest | always_defect
//   lag:<rounds> | re_entry:<rounds> | sybil:<identities> | imbalance:<cost>
//   multi_tactic:<basic>+<basic>+...
//   ballot_stuffing:fake_rate=<p>,coalition=<i|j|...>
//   bad_mouthing:target_rate=<p>,coalition=<i|j|...>

inline BasicStrategy parse_basic_strategy(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  bool has_arg = colon != std::string::npos;

  if (name == "honest" || name == "always_defect") {
    if (has_arg)
      throw ConfigError("strategy '" + name + "' takes no argument: '" + spec + "'");
    if (name == "honest") return HonestStrategy{};
    return AlwaysDefectStrategy{};
  }
  if (name == "lag")
    return LagStrategy{has_arg ? detail::to_int(arg, "lag") : LagStrategy{}.honest_rounds};
  if (name == "re_entry")
    return ReEntryStrategy{has_arg ? detail::to_int(arg, "re_entry")
                                   : ReEntryStrategy{}.defect_rounds};
  if (name == "sybil")
    return SybilStrategy{has_arg ? detail::to_int(arg, "sybil")
                                 : SybilStrategy{}.identity_count};
  if (name == "imbalance")
    return ImbalanceStrategy{has_arg ? detail::to_double(arg, "imbalance")
                                     : ImbalanceStrategy{}.cost_threshold};
  throw ConfigError("unknown strategy '" + name + "'");
}

namespace detail {

inline std::vector<int> parse_coalition(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, '|')) out.push_back(to_int(part, "coalition"));
  return out;
}

template <typename Coalition>
inline Coalition parse_coalition_strategy(const std::string& name, const std::string& arg,
                                          const char* rate_key, double Coalition::*rate) {
  Coalition s{};
  for (const auto& field : split(arg, ',')) {
    auto eq = field.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key=value in '" + name + "' argument: '" + field + "'");
    std::string key = field.substr(0, eq);
    std::string value = field.substr(eq + 1);
    if (key == rate_key)
      s.*rate = to_double(value, key);
    else if (key == "coalition")
      s.coalition = parse_coalition(value);
    else
      throw ConfigError("unknown field '" + key + "' for strategy '" + name + "'");
  }
  return s;
}

}  // namespace detail

inline StrategyKind parse_strategy(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "multi_tactic") {
    if (arg.empty()) throw ConfigError("multi_tactic needs at least one component");
    MultiTacticStrategy multi;
    for (const auto& part : detail::split(arg, '+'))
      multi.components.push_back(parse_basic_strategy(part));
    return multi;
  }
  if (name == "ballot_stuffing")
    return detail::parse_coalition_strategy<BallotStuffingStrategy>(
        name, arg, "fake_rate", &BallotStuffingStrategy::fake_rate);
  if (name == "bad_mouthing")
    return detail::parse_coalition_strategy<BadMouthingStrategy>(
        name, arg, "target_rate", &BadMouthingStrategy::target_rate);

  BasicStrategy basic = parse_basic_strategy(spec);
  return std::visit([](auto s) -> StrategyKind { return s; }, basic);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline BuyerPolicy parse_buyer_policy(const std::string& v) {
  if (v == "price_first") return BuyerPolicy::price_first;
  if (v == "trust_proportional") return BuyerPolicy::trust_proportional;
  throw ConfigError("invalid buyer_policy '" + v +
                    "' (expected price_first or trust_proportional)");
}

inline TrustVariant parse_trust_variant(const std::string& v) {
  if (v == "f1") return TrustVariant::f1;
  if (v == "f2") return TrustVariant::f2;
  if (v == "extended") return TrustVariant::extended;
  throw ConfigError("invalid trust_variant '" + v + "' (expected f1, f2 or extended)");
}

inline void apply_market_key(MarketConfig& c, const std::string& k, const std::string& v) {
  if (k == "rounds") c.rounds = to_int(v, k);
  else if (k == "buyers_per_round") c.buyers_per_round = to_int(v, k);
  else if (k == "buyer_policy") c.buyer_policy = parse_buyer_policy(v);
  else if (k == "trust_variant") c.trust_variant = parse_trust_variant(v);
  else if (k == "feedback_threshold") c.feedback_threshold = to_double(v, k);
  else if (k == "rng_seed") c.rng_seed = to_u64(v, k);
  else if (k == "price_honest") c.price_honest = to_double(v, k);
  else if (k == "price_defect") c.price_defect = to_double(v, k);
  else if (k == "margin_honest") c.margin_honest = to_double(v, k);
  else if (k == "margin_defect") c.margin_defect = to_double(v, k);
  else if (k == "cost_cheap") c.cost_cheap = to_double(v, k);
  else if (k == "cost_expensive") c.cost_expensive = to_double(v, k);
  else if (k == "cost_expensive_prob") c.cost_expensive_prob = to_double(v, k);
  else if (k == "reference_cost") c.reference_cost = to_double(v, k);
  else throw ConfigError("unknown key '" + k + "' in section [market]");
}

inline void apply_trust_key(TrustParams& t, const std::string& k, const std::string& v) {
  if (k == "eta") t.eta = to_double(v, k);
  else if (k == "theta") t.theta = to_double(v, k);
  else if (k == "kappa") t.kappa = to_double(v, k);
  else if (k == "epsilon") t.epsilon = to_double(v, k);
  else if (k == "mu_max") t.mu_max = to_double(v, k);
  else if (k == "rho") t.rho = to_double(v, k);
  else if (k == "recovery_steps_k") t.recovery_steps_k = to_int(v, k);
  else if (k == "activity_threshold") t.activity_threshold = to_int(v, k);
  else if (k == "saturation_n0") t.saturation_n0 = to_u64(v, k);
  else if (k == "high_expectancy_factor") t.high_expectancy_factor = to_double(v, k);
  else throw ConfigError("unknown key '" + k + "' in section [trust]");
}

inline void apply_utility_key(UtilityParams& u, const std::string& k, const std::string& v) {
  if (k == "omega") u.omega = to_double(v, k);
  else if (k == "sigma") u.sigma = to_double(v, k);
  else if (k == "mu_effective") u.mu_effective = to_double(v, k);
  else if (k == "rho") u.rho = to_double(v, k);
  else if (k == "lifetime") u.lifetime = to_double(v, k);
  else if (k == "recovery_steps_k") u.recovery_steps_k = to_int(v, k);
  else if (k == "delta_rounds") u.delta_rounds = to_int(v, k);
  else throw ConfigError("unknown key '" + k + "' in section [utility]");
}

}  // namespace detail

/// Parses config text. Comment lines start with '#'; blank lines are
/// skipped; keys outside any section, unknown sections, unknown keys and
/// malformed values all raise ConfigError.
inline MarketConfig parse_config(std::istream& in) {
  MarketConfig cfg;
  cfg.sellers.clear();
  std::string section;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) + ": malformed section header '" + t + "'");
      section = t.substr(1, t.size() - 2);
      if (section != "market" && section != "trust" && section != "utility" &&
          section != "sellers")
        throw ConfigError("unknown section [" + section + "]");
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value, got '" + t + "'");
    std::string key = detail::trim(t.substr(0, eq));
    std::string value = detail::trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError("key '" + key + "' appears before any [section] header");

    if (section == "market") detail::apply_market_key(cfg, key, value);
    else if (section == "trust") detail::apply_trust_key(cfg.trust, key, value);
    else if (section == "utility") detail::apply_utility_key(cfg.utility, key, value);
    else {  // sellers
      if (key != "seller")
        throw ConfigError("unknown key '" + key + "' in section [sellers]");
      cfg.sellers.push_back(SellerSpec{parse_strategy(value)});
    }
  }
  return cfg;
}

inline MarketConfig parse_config(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

inline MarketConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

// ---------------------------------------------------------------------------
// Serialization

inline void write_config(std::ostream& out, const MarketConfig& c) {
  auto d = [](double v) { return detail::format_double(v); };
  out << "# " << kConfigFormatVersion << "\n";
  out << "[market]\n";
  out << "rounds = " << c.rounds << "\n";
  out << "buyers_per_round = " << c.buyers_per_round << "\n";
  out << "buyer_policy = " << to_label(c.buyer_policy) << "\n";
  out << "trust_variant = " << to_label(c.trust_variant) << "\n";
  out << "feedback_threshold = " << d(c.feedback_threshold) << "\n";
  out << "rng_seed = " << c.rng_seed << "\n";
  out << "price_honest = " << d(c.price_honest) << "\n";
  out << "price_defect = " << d(c.price_defect) << "\n";
  out << "margin_honest = " << d(c.margin_honest) << "\n";
  out << "margin_defect = " << d(c.margin_defect) << "\n";
  out << "cost_cheap = " << d(c.cost_cheap) << "\n";
  out << "cost_expensive = " << d(c.cost_expensive) << "\n";
  out << "cost_expensive_prob = " << d(c.cost_expensive_prob) << "\n";
  out << "reference_cost = " << d(c.reference_cost) << "\n";
  out << "[trust]\n";
  out << "eta = " << d(c.trust.eta) << "\n";
  out << "theta = " << d(c.trust.theta) << "\n";
  out << "kappa = " << d(c.trust.kappa) << "\n";
  out << "epsilon = " << d(c.trust.epsilon) << "\n";
  out << "mu_max = " << d(c.trust.mu_max) << "\n";
  out << "rho = " << d(c.trust.rho) << "\n";
  out << "recovery_steps_k = " << c.trust.recovery_steps_k << "\n";
  out << "activity_threshold = " << c.trust.activity_threshold << "\n";
  out << "saturation_n0 = " << c.trust.saturation_n0 << "\n";
  out << "high_expectancy_factor = " << d(c.trust.high_expectancy_factor) << "\n";
  out << "[utility]\n";
  out << "omega = " << d(c.utility.omega) << "\n";
  out << "sigma = " << d(c.utility.sigma) << "\n";
  out << "mu_effective = " << d(c.utility.mu_effective) << "\n";
  out << "rho = " << d(c.utility.rho) << "\n";
  out << "lifetime = " << d(c.utility.lifetime) << "\n";
  out << "recovery_steps_k = " << c.utility.recovery_steps_k << "\n";
  out << "delta_rounds = " << c.utility.delta_rounds << "\n";
  out << "[sellers]\n";
  for (const auto& s : c.sellers) out << "seller = " << format_strategy(s.strategy) << "\n";
}

inline std::string config_text(const MarketConfig& c) {
  std::ostringstream out;
  write_config(out, c);
  return out.str();
}

}  // namespace trustgame
