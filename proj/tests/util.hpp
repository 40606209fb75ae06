// Shared helpers for the test suites: path enumeration, resolution and
// interpretation sweeps, and randomized rule-application generators.

#pragma once

#include <optional>
#include <random>
#include <vector>

#include "cl16/calculus.hpp"
#include "cl16/cirquent.hpp"
#include "cl16/enumerate.hpp"
#include "cl16/semantics.hpp"

namespace cl16::testutil {

inline void collectPaths(const Cirquent& c, Path& here, std::vector<Path>& out) {
  out.push_back(here);
  if (!c.isBinary()) return;
  here.push_back(0);
  collectPaths(c.left(), here, out);
  here.back() = 1;
  collectPaths(c.right(), here, out);
  here.pop_back();
}

inline std::vector<Path> allPaths(const Cirquent& c) {
  std::vector<Path> out;
  Path p;
  collectPaths(c, p, out);
  return out;
}

// Every partial resolution over the given clusters (3^k of them).
inline std::vector<ResolutionMap> allResolutions(const std::set<ClusterId>& clusters) {
  std::vector<ResolutionMap> out{{}};
  for (ClusterId cl : clusters) {
    std::vector<ResolutionMap> next;
    for (const ResolutionMap& r : out) {
      next.push_back(r);  // unresolved
      for (int v = 0; v <= 1; ++v) {
        ResolutionMap r2 = r;
        r2.emplace(cl, v);
        next.push_back(std::move(r2));
      }
    }
    out = std::move(next);
  }
  return out;
}

template <typename Rng>
int pick(Rng& rng, int n) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

// Plants `redex` at a random position of a random context drawn from `en`.
template <typename Rng>
std::pair<Cirquent, Path> embed(Rng& rng, const Enumerator& en, const Cirquent& redex) {
  Cirquent context = en.sample(rng);
  std::vector<Path> paths = allPaths(context);
  Path at = paths[pick(rng, static_cast<int>(paths.size()))];
  return {replaceAt(context, at, redex), at};
}

// Random cirquents whose exact rank stays within the default digit cap.
// Tetration at por nodes caps disjunctions hard: an in-cap por has exactly
// two disjuncts of rank sum <= 3, and a pand child must have rank well below
// the cap's exponent bound. The shapes below keep every purification stage
// that is reachable within the cap reachable (pand-under-por and 3-chain
// collapses are impossible within any feasible cap).
template <typename Rng>
Cirquent genLeaf(Rng& rng, int letters) {
  int k = pick(rng, 2 * letters + 2);
  if (k == 0) return Cirquent::top();
  if (k == 1) return Cirquent::bot();
  k -= 2;
  return Cirquent::lit(defaultLetters(letters)[k / 2], k % 2 == 0);
}

template <typename Rng>
Cirquent genTiny(Rng& rng, int letters, int clusters) {
  if (pick(rng, 2) == 0) return genLeaf(rng, letters);
  ClusterId cl = defaultClusters(clusters)[pick(rng, clusters)];
  Cirquent l = genLeaf(rng, letters);
  Cirquent r = genLeaf(rng, letters);
  return Cirquent::choice(cl.polarity == Polarity::Disjunctive ? Kind::ChOr : Kind::ChAnd, cl, l, r);
}

template <typename Rng>
Cirquent genOrBlock(Rng& rng, int letters, int clusters) {
  Cirquent l = genTiny(rng, letters, clusters);
  Cirquent r = genLeaf(rng, letters);
  if (pick(rng, 3) == 0) {  // complementary pair for the stage-4 collapse
    Letter p = defaultLetters(letters)[pick(rng, letters)];
    l = Cirquent::lit(p, false);
    r = Cirquent::lit(p, true);
  }
  if (pick(rng, 2) == 0) std::swap(l, r);
  return Cirquent::por(l, r);
}

template <typename Rng>
Cirquent genAndChild(Rng& rng, int letters, int clusters) {
  switch (pick(rng, 5)) {
    case 0: return genLeaf(rng, letters);
    case 1: return genTiny(rng, letters, clusters);
    case 2: return Cirquent::por(genLeaf(rng, letters), genLeaf(rng, letters));
    case 3: return Cirquent::pand(genLeaf(rng, letters), genTiny(rng, letters, clusters));
    default: {
      ClusterId cl = conj(1 + pick(rng, 2));
      return Cirquent::chand(cl, genTiny(rng, letters, clusters), genTiny(rng, letters, clusters));
    }
  }
}

template <typename Rng>
Cirquent genRankedCirquent(Rng& rng, int letters, int clusters, int depth = 3) {
  if (depth == 0) return genLeaf(rng, letters);
  switch (pick(rng, 7)) {
    case 0: return genLeaf(rng, letters);
    case 1: return genTiny(rng, letters, clusters);
    case 2: return genOrBlock(rng, letters, clusters);
    case 3: return Cirquent::pand(genAndChild(rng, letters, clusters),
                                  genAndChild(rng, letters, clusters));
    case 4: {  // both conjuncts chand-rooted
      ClusterId a = conj(1 + pick(rng, 2)), b = conj(1 + pick(rng, 2));
      return Cirquent::pand(
          Cirquent::chand(a, genTiny(rng, letters, clusters), genTiny(rng, letters, clusters)),
          Cirquent::chand(b, genTiny(rng, letters, clusters), genTiny(rng, letters, clusters)));
    }
    default: {
      ClusterId cl = defaultClusters(clusters)[pick(rng, clusters)];
      Cirquent l = genRankedCirquent(rng, letters, clusters, depth - 1);
      Cirquent r = genRankedCirquent(rng, letters, clusters, depth - 1);
      return Cirquent::choice(cl.polarity == Polarity::Disjunctive ? Kind::ChOr : Kind::ChAnd, cl,
                              l, r);
    }
  }
}

struct Application {
  Cirquent conclusion;
  RuleDescriptor descriptor;
};

// A random application of the given single-premise rule variant: random
// operands from `operands`, redex planted in a random context from
// `contexts`. Choosing and Splitting have dedicated generators below.
template <typename Rng>
Application genApplication(Rng& rng, Rule rule, Variant variant, const Enumerator& operands,
                           const Enumerator& contexts) {
  auto rnd = [&] { return operands.sample(rng); };
  ClusterId conjA = conj(1 + pick(rng, 2));
  ClusterId conjB = conj(1 + pick(rng, 2));
  Cirquent redex = Cirquent::top();
  RuleDescriptor d;
  d.rule = rule;
  d.variant = variant;
  switch (rule) {
    case Rule::Commutativity:
      redex = Cirquent::par(variant == Variant::A ? Kind::Or : Kind::And, rnd(), rnd());
      break;
    case Rule::Associativity: {
      Kind k = variant == Variant::A ? Kind::Or : Kind::And;
      redex = Cirquent::par(k, Cirquent::par(k, rnd(), rnd()), rnd());
      break;
    }
    case Rule::Identity:
      redex = variant == Variant::A ? Cirquent::por(rnd(), Cirquent::bot())
                                    : Cirquent::pand(rnd(), Cirquent::top());
      break;
    case Rule::Domination:
      redex = variant == Variant::A ? Cirquent::por(rnd(), Cirquent::top())
                                    : Cirquent::pand(rnd(), Cirquent::bot());
      break;
    case Rule::Distribution:
      redex = variant == Variant::A
                  ? Cirquent::por(Cirquent::pand(rnd(), rnd()), rnd())
                  : Cirquent::por(Cirquent::chand(conjA, rnd(), rnd()), rnd());
      break;
    case Rule::Trivialization: {
      Letter p = defaultLetters(4)[pick(rng, 4)];
      redex = Cirquent::por(Cirquent::lit(p, false), Cirquent::lit(p, true));
      d.letter = p;
      break;
    }
    case Rule::Cleansing: {
      Cirquent inner = Cirquent::chand(conjA, rnd(), rnd());
      auto [arm, innerPath] = embed(rng, contexts, inner);
      redex = variant == Variant::A ? Cirquent::chand(conjA, arm, rnd())
                                    : Cirquent::chand(conjA, rnd(), arm);
      d.innerPath = innerPath;
      break;
    }
    case Rule::Quadrilemma:
      redex = Cirquent::pand(Cirquent::chand(conjA, rnd(), rnd()),
                             Cirquent::chand(conjB, rnd(), rnd()));
      d.variant = Variant::None;
      break;
    default:
      throw std::logic_error("genApplication: use the dedicated generator for this rule");
  }
  if (rule == Rule::Trivialization) d.variant = Variant::None;
  auto [conclusion, path] = embed(rng, contexts, redex);
  d.path = path;
  if (rule == Rule::Quadrilemma) {
    int fresh = 1;
    while (containsCluster(conclusion, conj(fresh))) ++fresh;
    d.cluster = conj(fresh);
  }
  return {conclusion, d};
}

// A random Choosing application: resamples until the conclusion has a chor.
template <typename Rng>
std::optional<Application> genChoosing(Rng& rng, const Enumerator& en, int attempts = 100) {
  for (int t = 0; t < attempts; ++t) {
    Cirquent c = en.sample(rng);
    std::vector<ClusterId> disjs;
    for (ClusterId cl : clustersOf(c))
      if (cl.polarity == Polarity::Disjunctive) disjs.push_back(cl);
    if (disjs.empty()) continue;
    RuleDescriptor d;
    d.rule = Rule::Choosing;
    d.cluster = disjs[pick(rng, static_cast<int>(disjs.size()))];
    d.choice = pick(rng, 2);
    d.variant = *d.choice == 0 ? Variant::A : Variant::B;
    return Application{c, d};
  }
  return std::nullopt;
}

// A random Splitting application: components free of the root cluster.
template <typename Rng>
Application genSplitting(Rng& rng, const Enumerator& en) {
  ClusterId cl = conj(1 + pick(rng, 2));
  auto clean = [&] {
    while (true) {
      Cirquent c = en.sample(rng);
      if (!containsCluster(c, cl)) return c;
    }
  };
  RuleDescriptor d;
  d.rule = Rule::Splitting;
  d.cluster = cl;
  return {Cirquent::chand(cl, clean(), clean()), d};
}

}  // namespace cl16::testutil
