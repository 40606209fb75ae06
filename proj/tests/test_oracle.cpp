#include <doctest.h>

#include "cl16/enumerate.hpp"
#include "cl16/oracle.hpp"
#include "cl16/parse.hpp"
#include "util.hpp"

using namespace cl16;

TEST_CASE("decideUniform: worked examples") {
  CHECK(decideUniform(parse("~p | p")).valid);
  CHECK_FALSE(decideUniform(parse("p +[1] ~p")).valid);
  CHECK(decideUniform(parse("(p *[1] q) -> (p *[2] q)")).valid);
  CHECK(decideUniform(parse("p & (q +[1] r) -> (p&q) +[2] (p&r)")).valid);
  CHECK_FALSE(decideUniform(parse("p")).valid);
  // An unresolved chand is won, but the environment may resolve it.
  CHECK_FALSE(decideUniform(parse("p *[1] q")).valid);
  CHECK(decideUniform(parse("(~p | p) *[1] (~q | q)")).valid);
}

TEST_CASE("decideUniform: extracted policy mirrors the environment") {
  // (p *[1] q) -> (p *[2] q) expands to (~p +[1] ~q) | (p *[2] q): the
  // machine waits, then mirrors the environment's c2 choice into d1.
  Cirquent c = parse("(~p +[1] ~q) | (p *[2] q)");
  OracleResult r = decideUniform(c);
  REQUIRE(r.valid);
  REQUIRE(r.policy.has_value());
  CHECK(r.policy->at({}).wait);
  Action a0 = r.policy->at({{conj(2), 0}});
  CHECK_FALSE(a0.wait);
  CHECK(a0.cluster == disj(1));
  CHECK(a0.choice == 0);
  Action a1 = r.policy->at({{conj(2), 1}});
  CHECK_FALSE(a1.wait);
  CHECK(a1.choice == 1);

  SimulationResult sim = simulate(c, *r.policy, {{conj(2), 0}});
  CHECK(sim.finalState == ResolutionMap{{conj(2), 0}, {disj(1), 0}});
  CHECK(sim.wonUnderAll);
  CHECK(sim.winners.size() == 4);
}

TEST_CASE("simulate: waiting everywhere on an unresolved chand") {
  Cirquent c = parse("p *[1] q");
  Policy waitEverywhere({conj(1)});
  waitEverywhere.define({}, Action::waiting());
  SimulationResult sim = simulate(c, waitEverywhere, {});
  CHECK(sim.finalState.empty());
  CHECK(sim.wonUnderAll);  // the final state is won under every interpretation
  // ... but the policy is undefined after an environment move it cannot meet
  CHECK_THROWS_AS(simulate(c, waitEverywhere, {{conj(1), 0}}), std::out_of_range);
}

TEST_CASE("simulate: policy soundness against all schedules on small valid cirquents") {
  Enumerator en(3, defaultLetters(2), defaultClusters(2));
  std::mt19937_64 rng(61);
  int validSeen = 0;
  for (int t = 0; t < 2000 && validSeen < 120; ++t) {
    Cirquent c = en.sample(rng);
    OracleResult r = decideUniform(c);
    if (!r.valid) continue;
    ++validSeen;
    for (const auto& schedule : allEnvSchedules(c)) {
      SimulationResult sim = simulate(c, *r.policy, schedule);
      CHECK(sim.wonUnderAll);
    }
  }
  CHECK(validSeen == 120);
}

TEST_CASE("classical fragment: oracle equals truth-table tautology") {
  Enumerator en(3, defaultLetters(2), {});
  for (uint64_t i = 0; i < en.total(); ++i) {
    Cirquent c = en.at(i);
    CHECK(decideUniform(c).valid == wonUnderAll(c, {}));
  }
}

TEST_CASE("anti-symmetry on the cluster-free fragment") {
  Enumerator en(3, defaultLetters(2), {});
  std::mt19937_64 rng(67);
  for (int t = 0; t < 200; ++t) {
    Cirquent c = en.sample(rng);
    if (wonUnderAll(c, {}) && wonUnderAll(negate(c), {})) continue;  // cannot both be tautologies
    bool bothValid = decideUniform(c).valid && decideUniform(negate(c)).valid;
    CHECK_FALSE(bothValid);
  }
}

TEST_CASE("caps are enforced") {
  Cirquent c = parse("p1 & p2 & p3 & p4 & p5 & p6 & p7 & p8 & p9 & pa & pb");
  OracleCaps caps;
  caps.maxLetters = 10;
  CHECK_THROWS_AS(decideUniform(c, caps), CapExceeded);
  OracleCaps tight;
  tight.maxClusters = 1;
  CHECK_THROWS_AS(decideUniform(parse("(p +[1] q) & (r *[1] s)"), tight), CapExceeded);
}

TEST_CASE("refutation for an invalid cirquent") {
  OracleResult r = decideUniform(parse("p +[1] ~p"), {}, true);
  REQUIRE_FALSE(r.valid);
  REQUIRE(r.refutation != nullptr);
  // At the empty state the environment can simply stop: unresolved chor loses.
  CHECK(r.refutation->envStops);
  CHECK(r.refutation->machineBranches.size() == 2);
  for (const auto& [move, child] : r.refutation->machineBranches) {
    CHECK(child->envStops);  // after either machine choice some interpretation falsifies
    Interpretation bad = child->falsifying;
    ResolutionMap res{{move.cluster, move.choice}};
    CHECK(winEval(parse("p +[1] ~p"), res, bad) == Player::Environment);
  }
}

TEST_CASE("policy dump format") {
  OracleResult r = decideUniform(parse("(~p +[1] ~q) | (p *[2] q)"));
  REQUIRE(r.valid);
  std::string dump = r.policy->dump();
  CHECK(dump.find("state {d1=?,c2=?} -> wait") != std::string::npos);
  CHECK(dump.find("state {d1=0,c2=0} -> wait") != std::string::npos);
  CHECK(dump.find("state {d1=?,c2=0} -> d1.0") != std::string::npos);
}

TEST_CASE("greedy action maximizes won interpretations") {
  // On T +[1] p the best move is d1.0 even though the cirquent is valid.
  Action a = greedyAction(parse("T +[1] p"), {});
  CHECK_FALSE(a.wait);
  CHECK(a.cluster == disj(1));
  CHECK(a.choice == 0);
  // Nothing beats waiting on an unresolved chand.
  CHECK(greedyAction(parse("p *[1] q"), {}).wait);
}
