#include <doctest.h>

#include "cl16/enumerate.hpp"
#include "cl16/parse.hpp"
#include "cl16/semantics.hpp"
#include "util.hpp"

using namespace cl16;

TEST_CASE("checkLegal: the four conditions") {
  Run ok = {{Player::Machine, {disj(1), 0}}};
  CHECK(checkLegal(ok).ok);

  Run env_in_disj = {{Player::Environment, {disj(1), 0}}};
  Legality l2 = checkLegal(env_in_disj);
  CHECK_FALSE(l2.ok);
  CHECK(l2.index == 0);
  CHECK(l2.condition == 2);

  Run twice = {{Player::Machine, {disj(1), 0}}, {Player::Machine, {disj(1), 1}}};
  Legality l4 = checkLegal(twice);
  CHECK_FALSE(l4.ok);
  CHECK(l4.index == 1);
  CHECK(l4.condition == 4);

  Run machine_in_conj = {{Player::Machine, {conj(2), 0}}};
  Legality l3 = checkLegal(machine_in_conj);
  CHECK_FALSE(l3.ok);
  CHECK(l3.index == 0);
  CHECK(l3.condition == 3);
}

TEST_CASE("resolutionOf") {
  CHECK(resolutionOf({}).empty());
  Run one = {{Player::Machine, {disj(1), 0}}};
  CHECK(resolutionOf(one) == ResolutionMap{{disj(1), 0}});
  Run two = {{Player::Environment, {conj(2), 1}}, {Player::Machine, {disj(1), 0}}};
  CHECK(resolutionOf(two) == ResolutionMap{{conj(2), 1}, {disj(1), 0}});
  Run bad = {{Player::Environment, {disj(1), 0}}};
  CHECK_THROWS_AS(resolutionOf(bad), std::invalid_argument);
}

TEST_CASE("winEval: clauses of the win definition") {
  Interpretation pTrue({{"p", true}});
  Interpretation pFalse({{"p", false}});
  Interpretation pqAny({{"p", false}, {"q", true}});

  CHECK(winEval(parse("p"), {}, pTrue) == Player::Machine);
  CHECK(winEval(parse("p"), {}, pFalse) == Player::Environment);
  CHECK(winEval(parse("~p"), {}, pFalse) == Player::Machine);
  CHECK(winEval(parse("p *[1] q"), {}, pqAny) == Player::Machine);   // unresolved chand
  CHECK(winEval(parse("p +[1] q"), {}, pqAny) == Player::Environment);  // unresolved chor
  CHECK(winEval(parse("p +[1] q"), {{disj(1), 0}}, pFalse) == Player::Environment);
  CHECK(winEval(parse("p +[1] q"), {{disj(1), 1}}, pqAny) == Player::Machine);
  CHECK(winEval(parse("T"), {}, {}) == Player::Machine);
  CHECK(winEval(parse("F"), {}, {}) == Player::Environment);
  CHECK_THROWS_AS(winEval(parse("p & q"), {}, pTrue), std::out_of_range);
}

TEST_CASE("winEval ignores resolutions of absent clusters") {
  Interpretation pFalse({{"p", false}});
  CHECK(winEval(parse("p *[1] q"), {{conj(9), 0}, {disj(5), 1}},
                Interpretation({{"p", false}, {"q", false}})) == Player::Machine);
  CHECK(winEval(parse("p"), {{conj(1), 0}}, pFalse) == Player::Environment);
}

TEST_CASE("wonUnderAll") {
  CHECK(wonUnderAll(parse("~p | p"), {}));
  CHECK_FALSE(wonUnderAll(parse("p"), {}));
  CHECK(wonUnderAll(parse("p *[1] q"), {}));
  CHECK_FALSE(wonUnderAll(parse("p *[1] q"), {{conj(1), 0}}));
}

TEST_CASE("duality: negation flips the winner under the dual resolution") {
  Enumerator en(3, defaultLetters(2), defaultClusters(2));
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    Cirquent c = en.sample(rng);
    Cirquent nc = negate(c);
    auto interps = allInterpretations(lettersOf(c));
    for (const ResolutionMap& res : testutil::allResolutions(clustersOf(c)))
      for (const Interpretation& interp : interps)
        CHECK(winEval(nc, dualResolution(res), interp) == flip(winEval(c, res, interp)));
  }
}

TEST_CASE("order irrelevance: evaluation depends on a run only through its resolution") {
  Run run = {{Player::Machine, {disj(1), 0}},
             {Player::Environment, {conj(1), 1}},
             {Player::Machine, {disj(2), 1}}};
  Run permuted = {run[2], run[0], run[1]};
  CHECK(checkLegal(run).ok);
  CHECK(checkLegal(permuted).ok);
  Cirquent c = parse("(p +[1] q) & (r *[1] s) & (p +[2] s)");
  for (const Interpretation& interp : allInterpretations(lettersOf(c)))
    CHECK(winEval(c, resolutionOf(run), interp) == winEval(c, resolutionOf(permuted), interp));
  CHECK(resolutionOf(run) == resolutionOf(permuted));
}

TEST_CASE("run and interpretation text formats") {
  Run r = parseRun("T d1.0; B c2.1");
  REQUIRE(r.size() == 2);
  CHECK(r[0].player == Player::Machine);
  CHECK(r[0].move.cluster == disj(1));
  CHECK(r[0].move.choice == 0);
  CHECK(r[1].player == Player::Environment);
  CHECK(r[1].move.cluster == conj(2));
  CHECK(printRun(r) == "T d1.0; B c2.1");
  CHECK(parseRun("T d1.0 B c2.1").size() == 2);  // whitespace-separated form
  CHECK(parseRun("").empty());

  Interpretation interp = parseInterpretation("p=1,q=0");
  CHECK(interp.at("p"));
  CHECK_FALSE(interp.at("q"));
  CHECK(printInterpretation(interp) == "p=1,q=0");
  CHECK_THROWS_AS(parseInterpretation("p=2"), std::invalid_argument);
}
