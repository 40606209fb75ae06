#include <doctest.h>

#include <map>

#include "cl16/enumerate.hpp"
#include "cl16/parse.hpp"
#include "cl16/purify.hpp"
#include "cl16/rank.hpp"
#include "util.hpp"

using namespace cl16;

namespace {

bool violates(const PurityReport& r, int condition) {
  for (const PurityViolation& v : r.violations)
    if (v.condition == condition) return true;
  return false;
}

// Rank at each stage-iteration boundary strictly decreases; intermediate
// steps inside one iteration are not measured.
void checkIterationRanks(const Cirquent& input, const PurificationTrace& trace) {
  Rank current = rank(input);
  size_t i = 0;
  while (i < trace.size()) {
    size_t j = i;
    while (j + 1 < trace.size() && trace[j + 1].iteration == trace[i].iteration &&
           trace[j + 1].stage == trace[i].stage)
      ++j;
    Rank after = rank(trace[j].after);
    CHECK(after < current);
    current = after;
    i = j + 1;
  }
}

}  // namespace

TEST_CASE("isPure: worked examples") {
  CHECK(isPure(parse("T")).pure);
  CHECK(isPure(parse("F")).pure);
  CHECK(isPure(parse("p")).pure);
  CHECK(violates(isPure(parse("(p & q) | r")), 2));
  CHECK(violates(isPure(parse("(p *[1] q) *[1] r")), 7));
  CHECK(violates(isPure(parse("p | ~p")), 4));
  CHECK(violates(isPure(parse("F | p")), 1));
  CHECK(violates(isPure(parse("(p *[1] q) | r")), 3));
  CHECK(violates(isPure(parse("T & p")), 5));
  CHECK(violates(isPure(parse("(p *[1] q) & (r *[2] s)")), 6));
}

TEST_CASE("isPure: surface means not under a choice connective") {
  CHECK(isPure(parse("(F | p) *[1] q")).pure);        // bot not at the surface
  CHECK(isPure(parse("((p & q) | r) +[1] s")).pure);  // pand-under-por not at the surface
  CHECK(violates(isPure(parse("((p & q) | r) & s")), 2));
  // condition 4 reads maximal chains
  CHECK(violates(isPure(parse("(p | q) | ~p")), 4));
  CHECK(violates(isPure(parse("q | (p & r | ~p | s)")), 2));  // chain has no literal pair, though
  CHECK_FALSE(violates(isPure(parse("q | ((p & r) | s)")), 4));
}

TEST_CASE("isPure: condition 6 and 7 are root conditions") {
  CHECK(violates(isPure(parse("(p *[1] q) & (r *[2] s) & (x *[1] y)")), 6));
  CHECK_FALSE(violates(isPure(parse("(p *[1] q) & x & (r *[2] s)")), 6));
  CHECK(violates(isPure(parse("(p *[1] q) *[1] r")), 7));
  CHECK(violates(isPure(parse("r *[1] ((p *[1] q) +[2] s)")), 7));  // occurrence under a chor
  CHECK_FALSE(violates(isPure(parse("(p *[2] q) *[1] r")), 7));
}

TEST_CASE("purify: worked examples") {
  CHECK(purify(parse("F | p")).pure == parse("p"));
  CHECK(purify(parse("(p & q) | r")).pure == parse("(p | r) & (q | r)"));
  CHECK(purify(parse("p | ~p")).pure == parse("T"));
  CHECK(purify(parse("(p *[1] q) *[1] r")).pure == parse("p *[1] r"));
  CHECK(purify(parse("(p *[1] q) & (r *[2] s)")).pure ==
        parse("((p & (r *[2] s)) *[1] (q & (r *[2] s))) *[3] (((p *[1] q) & r) *[2] ((p *[1] q) & s))"));
}

TEST_CASE("purify: stage-1/5 sides and stage-4 collapse") {
  CHECK(purify(parse("p | F")).pure == parse("p"));
  CHECK(purify(parse("F & p")).pure == parse("F"));
  CHECK(purify(parse("T | p")).pure == parse("T"));
  CHECK(purify(parse("p & T")).pure == parse("p"));
  CHECK(purify(parse("q | p | r | ~p")).pure == parse("T"));
  CHECK(purify(parse("q | (p & r) | ~q")).pure == parse("T"));
  CHECK(purify(parse("~p | p")).pure == parse("T"));
}

TEST_CASE("purify: traces replay through premisesOf") {
  for (const char* text : {"F | p", "(p & q) | r", "q | p | r | ~p", "(p *[1] q) *[1] r",
                           "(p *[1] q) & (r *[2] s)", "p & (q +[1] r) -> (p&q) +[2] (p&r)",
                           "((p | F) & (T | q)) *[1] (p & q *[1] r)"}) {
    PurifyResult res = purify(parse(text));
    Cirquent current = parse(text);
    for (const TraceStep& step : res.trace) {
      CHECK(step.before == current);
      auto premises = premisesOf(step.before, step.descriptor);
      REQUIRE(premises.size() == 1);
      CHECK(premises[0] == step.after);
      current = step.after;
    }
    CHECK(current == res.pure);
  }
}

TEST_CASE("purify: output is pure, rank does not increase, iterations decrease it") {
  Enumerator en(5, defaultLetters(2), defaultClusters(3));
  std::mt19937_64 rng(71);
  int checked = 0;
  for (int t = 0; t < 3000 && checked < 150; ++t) {
    Cirquent c = en.sample(rng);
    Rank before;
    try {
      before = rank(c);
    } catch (const RankOverflow&) {
      continue;
    }
    ++checked;
    PurifyResult res = purify(c);
    CHECK(isPure(res.pure).pure);
    CHECK(rank(res.pure) <= before);
    checkIterationRanks(c, res.trace);
  }
  CHECK(checked == 150);
}

TEST_CASE("purify: idempotent") {
  Enumerator en(4, defaultLetters(2), defaultClusters(2));
  std::mt19937_64 rng(73);
  for (int t = 0; t < 200; ++t) {
    Cirquent pure = purify(en.sample(rng)).pure;
    PurifyResult again = purify(pure);
    CHECK(again.trace.empty());
    CHECK(again.pure == pure);
  }
}

TEST_CASE("purify: preserves the induced game (no-quadrilemma traces exactly)") {
  Enumerator en(4, defaultLetters(2), defaultClusters(2));
  std::mt19937_64 rng(79);
  int exact = 0;
  for (int t = 0; t < 300; ++t) {
    Cirquent c = en.sample(rng);
    PurifyResult res = purify(c);
    bool hasQuadrilemma = false;
    for (const TraceStep& s : res.trace)
      if (s.descriptor.rule == Rule::Quadrilemma) hasQuadrilemma = true;

    std::set<ClusterId> clusters = clustersOf(c);
    for (ClusterId cl : clustersOf(res.pure)) clusters.insert(cl);
    std::set<Letter> letters = lettersOf(c);
    if (clusters.size() > 4 || letters.size() > 3) continue;
    auto interps = allInterpretations(letters);
    for (const ResolutionMap& res3 : testutil::allResolutions(clusters)) {
      bool fullyResolved = res3.size() == clusters.size();
      for (const Interpretation& interp : interps) {
        bool inWon = winEval(c, res3, interp) == Player::Machine;
        bool outWon = winEval(res.pure, res3, interp) == Player::Machine;
        if (!hasQuadrilemma) {
          CHECK(inWon == outWon);
        } else {
          if (inWon) CHECK(outWon);              // the rewrite direction only gains
          if (fullyResolved) CHECK(inWon == outWon);
        }
      }
    }
    if (!hasQuadrilemma) ++exact;
  }
  CHECK(exact > 100);
}
