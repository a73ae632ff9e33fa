#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "trustgame/market.hpp"

using namespace trustgame;

namespace {

MarketConfig tiny_config() {
  MarketConfig cfg;
  cfg.rounds = 1;
  cfg.buyers_per_round = 1;
  cfg.buyer_policy = BuyerPolicy::trust_proportional;
  cfg.trust_variant = TrustVariant::f1;
  cfg.cost_expensive_prob = 0.0;  // deterministic costs unless a test opts in
  cfg.sellers = {SellerSpec{HonestStrategy{}}};
  return cfg;
}

std::vector<FeedbackEvent> reports(int cooperates, int defects) {
  std::vector<FeedbackEvent> events;
  for (int i = 0; i < cooperates; ++i) {
    events.push_back({i, 1, Action::cooperate, 1.0, true});
  }
  for (int i = 0; i < defects; ++i) {
    events.push_back({cooperates + i, 1, Action::defect, 1.0, true});
  }
  return events;
}

// Rows of one persistent seller in round order (one identity assumed).
std::vector<TraceRow> rows_of(const SimulationTrace& trace, int persistent_id) {
  std::vector<TraceRow> out;
  for (const auto& r : trace.rows) {
    if (r.persistent_id == persistent_id) out.push_back(r);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Feedback aggregation

TEST_CASE("aggregate_feedback follows the cooperate share against the threshold") {
  CHECK(aggregate_feedback(reports(5, 0), 0.5) == Action::cooperate);
  CHECK(aggregate_feedback(reports(0, 5), 0.5) == Action::defect);
  // 2 of 5 cooperate: share 0.4 below a 0.5 threshold.
  CHECK(aggregate_feedback(reports(2, 3), 0.5) == Action::defect);
  CHECK(aggregate_feedback(reports(3, 2), 0.5) == Action::cooperate);
  // Share exactly at the threshold counts as cooperative.
  CHECK(aggregate_feedback(reports(2, 2), 0.5) == Action::cooperate);
  // A unanimity threshold flips a single dissent.
  CHECK(aggregate_feedback(reports(4, 0), 1.0) == Action::cooperate);
  CHECK(aggregate_feedback(reports(3, 1), 1.0) == Action::defect);
}

TEST_CASE("aggregate_feedback yields no signal for an empty period") {
  CHECK_FALSE(aggregate_feedback({}, 0.5).has_value());
}

TEST_CASE("aggregate_feedback rejects thresholds outside (0, 1]") {
  CHECK_THROWS_AS(aggregate_feedback(reports(1, 0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_feedback(reports(1, 0), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(aggregate_feedback(reports(1, 0), 1.5), std::invalid_argument);
}

TEST_CASE("fake reports steer the aggregate like genuine ones") {
  // Two genuine cooperative buyers out-voted by three injected defect reports.
  auto events = reports(2, 0);
  for (int i = 0; i < 3; ++i) {
    events.push_back({100 + i, 1, Action::defect, 1.0, /*genuine=*/false});
  }
  CHECK(aggregate_feedback(events, 0.5) == Action::defect);
}

// ---------------------------------------------------------------------------
// Buyer selection

TEST_CASE("price_first buyers never leave the cheapest tier") {
  std::vector<Listing> listings = {
      {0, 0, 2.0, TrustValue(-0.5)},  // cheap but distrusted
      {1, 0, 3.0, TrustValue(+0.9)},  // expensive and trusted
  };
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CHECK(buyer_select(listings, BuyerPolicy::price_first, rng) == 0);
  }
}

TEST_CASE("price_first splits ties by trust weight") {
  std::vector<Listing> listings = {
      {0, 0, 3.0, TrustValue(-1.0)},  // weight 0
      {1, 0, 3.0, TrustValue(+1.0)},  // weight 1
  };
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CHECK(buyer_select(listings, BuyerPolicy::price_first, rng) == 1);
  }
}

TEST_CASE("trust_proportional picks proportionally to (t+1)/2") {
  std::vector<Listing> listings = {
      {0, 0, 3.0, TrustValue(0.0)},
      {1, 0, 2.0, TrustValue(0.0)},  // price is ignored by this policy
  };
  std::mt19937_64 rng(11);
  int first = 0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    if (buyer_select(listings, BuyerPolicy::trust_proportional, rng) == 0) ++first;
  }
  const double share = static_cast<double>(first) / draws;
  CHECK(share > 0.45);
  CHECK(share < 0.55);
}

TEST_CASE("trust_proportional never picks a zero-weight listing when others exist") {
  std::vector<Listing> listings = {
      {0, 0, 3.0, TrustValue(-1.0)},  // weight 0
      {1, 0, 3.0, TrustValue(+0.2)},
  };
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    CHECK(buyer_select(listings, BuyerPolicy::trust_proportional, rng) == 1);
  }
}

TEST_CASE("all-zero weights fall back to a uniform pick") {
  std::vector<Listing> listings = {
      {0, 0, 3.0, TrustValue(-1.0)},
      {1, 0, 3.0, TrustValue(-1.0)},
  };
  std::mt19937_64 rng(5);
  int counts[2] = {0, 0};
  for (int i = 0; i < 400; ++i) {
    ++counts[buyer_select(listings, BuyerPolicy::trust_proportional, rng)];
  }
  CHECK(counts[0] > 100);
  CHECK(counts[1] > 100);
}

TEST_CASE("buyer_select rejects an empty market") {
  std::vector<Listing> none;
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(buyer_select(none, BuyerPolicy::price_first, rng),
                  std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Per-strategy decisions

namespace {

SellerAgent agent_with(StrategyKind s, int consecutive_defections = 0) {
  SellerAgent a;
  a.persistent_id = 0;
  a.strategy = std::move(s);
  a.identities.push_back(TrustState::newcomer(1));
  a.consecutive_defections = consecutive_defections;
  return a;
}

}  // namespace

TEST_CASE("honest and always_defect decisions") {
  const auto cfg = tiny_config();
  const auto h = decide_action(agent_with(HonestStrategy{}), 0, 1.0, cfg);
  CHECK(h.action == Action::cooperate);
  CHECK(h.price == cfg.price_honest);
  CHECK_FALSE(h.reset_after);

  const auto d = decide_action(agent_with(AlwaysDefectStrategy{}), 0, 1.0, cfg);
  CHECK(d.action == Action::defect);
  CHECK(d.price == cfg.price_defect);
  CHECK_FALSE(d.reset_after);
}

TEST_CASE("lag cooperates for exactly honest_rounds rounds") {
  const auto cfg = tiny_config();
  const auto agent = agent_with(LagStrategy{10});
  for (int r = 0; r < 10; ++r) {
    CHECK(decide_action(agent, r, 1.0, cfg).action == Action::cooperate);
  }
  CHECK(decide_action(agent, 10, 1.0, cfg).action == Action::defect);
  CHECK(decide_action(agent, 11, 1.0, cfg).action == Action::defect);
}

TEST_CASE("re_entry defects and schedules a reset on the delta-th defection") {
  const auto cfg = tiny_config();
  for (int prior = 0; prior < 2; ++prior) {
    const auto d =
        decide_action(agent_with(ReEntryStrategy{3}, prior), prior, 1.0, cfg);
    CHECK(d.action == Action::defect);
    CHECK_FALSE(d.reset_after);
  }
  const auto third = decide_action(agent_with(ReEntryStrategy{3}, 2), 2, 1.0, cfg);
  CHECK(third.action == Action::defect);
  CHECK(third.reset_after);
}

TEST_CASE("imbalance defects only above its cost threshold") {
  const auto cfg = tiny_config();
  const auto agent = agent_with(ImbalanceStrategy{5.0});
  CHECK(decide_action(agent, 0, 1.0, cfg).action == Action::cooperate);
  CHECK(decide_action(agent, 0, 5.0, cfg).action == Action::cooperate);  // not strict
  CHECK(decide_action(agent, 0, 10.0, cfg).action == Action::defect);
}

TEST_CASE("sybil and coalition strategies keep a cooperative storefront") {
  const auto cfg = tiny_config();
  CHECK(decide_action(agent_with(SybilStrategy{3}), 5, 10.0, cfg).action ==
        Action::cooperate);
  CHECK(decide_action(agent_with(BallotStuffingStrategy{{0, 1}, 0.5}), 5, 10.0, cfg)
            .action == Action::cooperate);
  CHECK(decide_action(agent_with(BadMouthingStrategy{{0}, 0.5}), 5, 10.0, cfg)
            .action == Action::cooperate);
}

TEST_CASE("multi_tactic defects only when every action component agrees") {
  const auto cfg = tiny_config();
  MultiTacticStrategy combo;
  combo.components = {LagStrategy{10}, ReEntryStrategy{3}};
  // During the lag phase the re-entry component's defect vote is outvoted.
  const auto early = decide_action(agent_with(combo), 4, 1.0, cfg);
  CHECK(early.action == Action::cooperate);
  CHECK_FALSE(early.reset_after);
  // After the lag phase both components defect; reset fires on the third.
  CHECK(decide_action(agent_with(combo, 0), 10, 1.0, cfg).action == Action::defect);
  const auto third = decide_action(agent_with(combo, 2), 12, 1.0, cfg);
  CHECK(third.action == Action::defect);
  CHECK(third.reset_after);
}

TEST_CASE("score-bearing components do not drag a multi_tactic toward defect") {
  const auto cfg = tiny_config();
  MultiTacticStrategy combo;
  combo.components = {SybilStrategy{2}, AlwaysDefectStrategy{}};
  // sybil carries no action vote, so the conjunction is just always_defect.
  CHECK(decide_action(agent_with(combo), 0, 1.0, cfg).action == Action::defect);
}

// ---------------------------------------------------------------------------
// One-round worked example

TEST_CASE("single honest seller, single buyer, one round") {
  auto cfg = tiny_config();
  MarketSimulation sim(cfg);
  sim.step();
  const auto trace = sim.finish();

  REQUIRE(trace.rows.size() == 1);
  const auto& row = trace.rows.front();
  CHECK(row.round == 0);
  CHECK(row.persistent_id == 0);
  CHECK(row.identity_id == 1);
  CHECK(row.action == Action::cooperate);
  CHECK(row.price == 3.0);
  CHECK(row.units_sold == 1);
  CHECK(row.revenue == 3.0);
  CHECK(row.lifetime == 1);

  // The posted score matches one direct cooperative update from a newcomer.
  const auto expected = update_f1(TrustState::newcomer(1), Action::cooperate,
                                  cfg.trust, 1);
  CHECK(row.trust == expected.trust.value());
  CHECK(row.trust == Catch::Approx(0.05).margin(1e-12));

  REQUIRE(trace.summary.size() == 1);
  const auto& s = trace.summary.front();
  CHECK(s.cumulative_revenue == 3.0);
  CHECK(s.cumulative_profit == cfg.margin_honest);
  CHECK(s.final_trust == expected.trust.value());
  CHECK(s.final_lifetime == 1);
  CHECK(s.resets == 0);
  CHECK(s.strategy == "honest");
}

// ---------------------------------------------------------------------------
// Trace wiring equals direct score updates

TEST_CASE("simulated scores replay the update rule exactly") {
  auto cfg = tiny_config();
  cfg.rounds = 30;

  for (auto variant : {TrustVariant::f1, TrustVariant::f2, TrustVariant::extended}) {
    for (bool honest : {true, false}) {
      cfg.trust_variant = variant;
      cfg.sellers = {SellerSpec{honest ? StrategyKind{HonestStrategy{}}
                                       : StrategyKind{AlwaysDefectStrategy{}}}};
      const auto trace = run(cfg);
      REQUIRE(trace.rows.size() == 30);

      TrustState state = TrustState::newcomer(1);
      const Action a = honest ? Action::cooperate : Action::defect;
      for (const auto& row : trace.rows) {
        switch (variant) {
          case TrustVariant::f1:
            state = update_f1(state, a, cfg.trust, 1);
            break;
          case TrustVariant::f2:
            state = update_f2(state, a, cfg.trust, 1);
            break;
          case TrustVariant::extended: {
            TransactionFeatures f;
            f.transaction_cost = cfg.cost_cheap;  // cost_expensive_prob == 0
            f.reference_cost = cfg.reference_cost;
            state = update_extended(state, a, f, cfg.trust, 1);
            break;
          }
        }
        CHECK(row.trust == state.trust.value());
        CHECK(row.lifetime == state.lifetime);
      }
    }
  }
}

TEST_CASE("extended updates read the round's transaction cost") {
  auto cfg = tiny_config();
  cfg.trust_variant = TrustVariant::extended;
  cfg.cost_cheap = 5.6;       // exactly 2x the reference below
  cfg.reference_cost = 2.8;
  cfg.sellers = {SellerSpec{AlwaysDefectStrategy{}}};
  const auto trace = run(cfg);
  REQUIRE(trace.rows.size() == 1);

  TransactionFeatures f;
  f.transaction_cost = 5.6;
  f.reference_cost = 2.8;
  const auto expected =
      update_extended(TrustState::newcomer(1), Action::defect, f, cfg.trust, 1);
  CHECK(trace.rows.front().trust == expected.trust.value());
  CHECK(trace.rows.front().trust == Catch::Approx(-0.18).margin(1e-12));
}

TEST_CASE("defector scores fall monotonically and freeze in the floor zone") {
  auto cfg = tiny_config();
  cfg.rounds = 20;
  cfg.sellers = {SellerSpec{AlwaysDefectStrategy{}}};
  const auto trace = run(cfg);
  const auto rows = rows_of(trace, 0);
  REQUIRE(rows.size() == 20);

  // Strict decrease while the penalty applies (the first 11 rounds with the
  // default curve), then constant: the floor zone forbids further loss.
  double prev = 0.0;
  for (int r = 0; r < 11; ++r) {
    CHECK(rows[static_cast<std::size_t>(r)].trust < prev);
    prev = rows[static_cast<std::size_t>(r)].trust;
  }
  for (std::size_t r = 11; r < rows.size(); ++r) {
    CHECK(rows[r].trust == rows[10].trust);
  }
  CHECK(rows.back().trust >= -1.0);
  CHECK(rows.back().trust <= cfg.trust.epsilon - 1.0);
}

// ---------------------------------------------------------------------------
// Silent sellers

TEST_CASE("a seller with no buyers keeps score and age but still appears in the trace") {
  auto cfg = tiny_config();
  cfg.rounds = 8;
  cfg.buyers_per_round = 3;
  cfg.buyer_policy = BuyerPolicy::price_first;
  // The defector undercuts (2 < 3), so price-first buyers never visit the
  // honest seller.
  cfg.sellers = {SellerSpec{HonestStrategy{}}, SellerSpec{AlwaysDefectStrategy{}}};
  const auto trace = run(cfg);

  const auto honest_rows = rows_of(trace, 0);
  REQUIRE(honest_rows.size() == 8);
  for (const auto& r : honest_rows) {
    CHECK(r.units_sold == 0);
    CHECK(r.revenue == 0.0);
    CHECK(r.trust == 0.0);
    CHECK(r.lifetime == 0);
  }

  const auto defect_rows = rows_of(trace, 1);
  REQUIRE(defect_rows.size() == 8);
  for (const auto& r : defect_rows) CHECK(r.units_sold == 3);
  CHECK(defect_rows.back().trust < 0.0);
  CHECK(trace.summary[0].cumulative_revenue == 0.0);
  CHECK(trace.summary[1].cumulative_revenue == 8 * 3 * 2.0);
}

// ---------------------------------------------------------------------------
// Identity resets

TEST_CASE("re_entry cycles through fresh identities") {
  auto cfg = tiny_config();
  cfg.rounds = 6;
  cfg.sellers = {SellerSpec{ReEntryStrategy{3}}};
  const auto trace = run(cfg);
  const auto rows = rows_of(trace, 0);
  REQUIRE(rows.size() == 6);

  // Rounds 0-2 on identity 1 (the reset lands after round 2), rounds 3-5 on
  // identity 2, and a second reset after round 5 leaves identity 3 current.
  for (int r = 0; r < 3; ++r) CHECK(rows[static_cast<std::size_t>(r)].identity_id == 1);
  for (int r = 3; r < 6; ++r) CHECK(rows[static_cast<std::size_t>(r)].identity_id == 2);

  // The fresh identity restarts the penalty path from zero.
  CHECK(rows[3].trust == rows[0].trust);
  CHECK(rows[4].trust == rows[1].trust);
  CHECK(rows[3].lifetime == 1);

  REQUIRE(trace.summary.size() == 1);
  CHECK(trace.summary.front().resets == 2);
  CHECK(trace.summary.front().final_trust == 0.0);  // identity 3 never traded
  CHECK(trace.summary.front().final_lifetime == 0);
}

TEST_CASE("sybil lists every identity each round") {
  auto cfg = tiny_config();
  cfg.rounds = 5;
  cfg.buyers_per_round = 4;
  cfg.sellers = {SellerSpec{SybilStrategy{3}}};
  const auto trace = run(cfg);
  REQUIRE(trace.rows.size() == 5 * 3);
  std::map<std::uint64_t, int> rounds_seen;
  for (const auto& r : trace.rows) {
    CHECK(r.persistent_id == 0);
    rounds_seen[r.identity_id] += 1;
  }
  REQUIRE(rounds_seen.size() == 3);
  for (const auto& [id, n] : rounds_seen) CHECK(n == 5);
}

// ---------------------------------------------------------------------------
// Conservation and determinism

TEST_CASE("every buyer buys exactly one unit each round") {
  auto cfg = tiny_config();
  cfg.rounds = 20;
  cfg.buyers_per_round = 7;
  cfg.cost_expensive_prob = 0.2;
  cfg.sellers = {SellerSpec{HonestStrategy{}}, SellerSpec{SybilStrategy{3}},
                 SellerSpec{AlwaysDefectStrategy{}}, SellerSpec{LagStrategy{5}}};
  const auto trace = run(cfg);
  std::map<int, int> units_by_round;
  for (const auto& r : trace.rows) {
    units_by_round[r.round] += r.units_sold;
    CHECK(r.revenue == r.units_sold * r.price);
  }
  REQUIRE(units_by_round.size() == 20);
  for (const auto& [round, units] : units_by_round) CHECK(units == 7);
}

TEST_CASE("identical configs and seeds replay byte-identical traces") {
  auto cfg = tiny_config();
  cfg.rounds = 25;
  cfg.buyers_per_round = 6;
  cfg.cost_expensive_prob = 0.3;
  cfg.rng_seed = 99;
  cfg.sellers = {SellerSpec{HonestStrategy{}}, SellerSpec{AlwaysDefectStrategy{}},
                 SellerSpec{BallotStuffingStrategy{{2, 3}, 0.5}},
                 SellerSpec{BallotStuffingStrategy{{2, 3}, 0.5}},
                 SellerSpec{BadMouthingStrategy{{4}, 0.5}}};

  std::ostringstream a, b;
  write_trace_csv(a, run(cfg));
  write_trace_csv(b, run(cfg));
  CHECK(a.str() == b.str());

  cfg.rng_seed = 100;
  std::ostringstream c;
  write_trace_csv(c, run(cfg));
  CHECK(a.str() != c.str());
}

TEST_CASE("symmetric honest sellers split demand evenly over many seeds") {
  auto cfg = tiny_config();
  cfg.rounds = 20;
  cfg.buyers_per_round = 10;
  cfg.sellers = {SellerSpec{HonestStrategy{}}, SellerSpec{HonestStrategy{}}};

  double revenue0 = 0.0, revenue1 = 0.0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    cfg.rng_seed = seed;
    const auto trace = run(cfg);
    revenue0 += trace.summary[0].cumulative_revenue;
    revenue1 += trace.summary[1].cumulative_revenue;
  }
  const double share = revenue0 / (revenue0 + revenue1);
  CHECK(share > 0.475);
  CHECK(share < 0.525);
}

// ---------------------------------------------------------------------------
// Coalition feedback attacks

TEST_CASE("ballot stuffing lifts a silent partner's score") {
  auto cfg = tiny_config();
  cfg.rounds = 12;
  cfg.buyers_per_round = 1;
  cfg.buyer_policy = BuyerPolicy::price_first;
  // Seller 2 undercuts, so genuine buyers never visit the coalition; any
  // score movement on sellers 0/1 comes from injected praise alone.
  cfg.price_defect = 2.0;
  cfg.sellers = {SellerSpec{BallotStuffingStrategy{{0, 1}, 1.0}},
                 SellerSpec{BallotStuffingStrategy{{0, 1}, 1.0}},
                 SellerSpec{AlwaysDefectStrategy{}}};
  const auto trace = run(cfg);
  CHECK(trace.summary[0].cumulative_revenue == 0.0);
  CHECK(trace.summary[0].final_trust > 0.0);
  CHECK(trace.summary[1].final_trust > 0.0);
  // Praise-only periods also age the identity.
  CHECK(trace.summary[0].final_lifetime == 12);
}

TEST_CASE("bad mouthing drags an honest rival below a clean twin") {
  auto cfg = tiny_config();
  cfg.rounds = 12;
  cfg.buyers_per_round = 2;
  // A 0.8 threshold lets one guaranteed smear outvote up to two genuine
  // cooperative reports, so every smeared period aggregates to defect.
  cfg.feedback_threshold = 0.8;
  cfg.sellers = {SellerSpec{BadMouthingStrategy{{0}, 1.0}},
                 SellerSpec{HonestStrategy{}}};
  const auto smeared = run(cfg);

  auto clean_cfg = cfg;
  clean_cfg.sellers[0] = SellerSpec{HonestStrategy{}};
  const auto clean = run(clean_cfg);

  CHECK(smeared.summary[1].final_trust < 0.0);
  CHECK(clean.summary[1].final_trust > 0.0);
  CHECK(smeared.summary[1].final_trust < clean.summary[1].final_trust);
}

// ---------------------------------------------------------------------------
// Validation and serialization

TEST_CASE("market config validation rejects out-of-range settings") {
  const auto ok = tiny_config();
  CHECK_NOTHROW(ok.validate());

  auto bad = ok;
  bad.rounds = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.buyers_per_round = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.feedback_threshold = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.feedback_threshold = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.price_honest = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.margin_defect = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.cost_expensive_prob = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.reference_cost = 0.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers.clear();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers = {SellerSpec{BallotStuffingStrategy{{0, 5}, 0.5}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers = {SellerSpec{LagStrategy{-1}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers = {SellerSpec{ReEntryStrategy{0}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers = {SellerSpec{SybilStrategy{0}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers = {SellerSpec{MultiTacticStrategy{}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.sellers = {SellerSpec{BallotStuffingStrategy{{0}, 1.5}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = ok;
  bad.trust.epsilon = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("trace and summary writers stamp their format versions") {
  auto cfg = tiny_config();
  const auto trace = run(cfg);

  std::ostringstream csv;
  write_trace_csv(csv, trace);
  std::istringstream lines(csv.str());
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(first == "# trustgame-trace v1");
  CHECK(second ==
        "round,persistent_id,identity_id,action,price,units_sold,trust,"
        "lifetime,revenue");

  std::ostringstream summary;
  write_summary(summary, trace);
  std::istringstream slines(summary.str());
  std::getline(slines, first);
  CHECK(first == "# trustgame-summary v1");
  std::getline(slines, second);
  CHECK(second.rfind("seller 0 strategy=honest revenue=3.000000", 0) == 0);
}

TEST_CASE("strategy labels round out the trace vocabulary") {
  CHECK(format_strategy(StrategyKind{HonestStrategy{}}) == "honest");
  CHECK(format_strategy(StrategyKind{AlwaysDefectStrategy{}}) == "always_defect");
  CHECK(format_strategy(StrategyKind{LagStrategy{10}}) == "lag:10");
  CHECK(format_strategy(StrategyKind{ReEntryStrategy{3}}) == "re_entry:3");
  CHECK(format_strategy(StrategyKind{SybilStrategy{3}}) == "sybil:3");
  MultiTacticStrategy combo;
  combo.components = {LagStrategy{10}, ReEntryStrategy{3}};
  CHECK(format_strategy(StrategyKind{combo}) == "multi_tactic:lag:10+re_entry:3");
}
