#include "cl16/purify.hpp"

#include <functional>
#include <optional>

namespace cl16 {

namespace {

// Preorder search over surface nodes (not under any choice connective), so
// the first hit is the leftmost-outermost one. pred receives the node and
// whether its immediate parent is a por node.
std::optional<Path> findSurface(const Cirquent& c,
                                const std::function<bool(const Cirquent&, bool)>& pred) {
  std::function<std::optional<Path>(const Cirquent&, Path&, bool)> go =
      [&](const Cirquent& x, Path& here, bool parentOr) -> std::optional<Path> {
    if (pred(x, parentOr)) return here;
    if (!isPar(x.kind())) return std::nullopt;
    bool childParentOr = x.kind() == Kind::Or;
    here.push_back(0);
    if (auto r = go(x.left(), here, childParentOr)) return r;
    here.back() = 1;
    if (auto r = go(x.right(), here, childParentOr)) return r;
    here.pop_back();
    return std::nullopt;
  };
  Path p;
  return go(c, p, false);
}

bool hasLeafChild(const Cirquent& x, Kind par, Kind leaf) {
  return x.kind() == par && (x.left().kind() == leaf || x.right().kind() == leaf);
}

struct Rewriter {
  Cirquent d;
  PurificationTrace trace;
  int stage = 0;
  int iteration = 0;

  void apply(const RuleDescriptor& desc) {
    Cirquent after = premisesOf(d, desc)[0];
    trace.push_back({d, desc, after, stage, iteration});
    d = std::move(after);
  }

  void applyAt(Rule rule, Variant variant, Path path) {
    RuleDescriptor desc;
    desc.rule = rule;
    desc.variant = variant;
    desc.path = std::move(path);
    apply(desc);
  }
};

// Stages 1 and 5 share their shape: collapse par nodes with a constant child.
// unitRule rewrites A op unit -> A or the constant; orFirst exhausts the por
// redexes before the pand ones.
bool constantStep(Rewriter& rw, Kind unit, Rule orRule, Rule pandRule) {
  if (auto p = findSurface(rw.d, [&](const Cirquent& x, bool) {
        return hasLeafChild(x, Kind::Or, unit);
      })) {
    Cirquent s = subcirquentAt(rw.d, *p);
    if (s.right().kind() != unit) rw.applyAt(Rule::Commutativity, Variant::A, *p);
    rw.applyAt(orRule, Variant::A, *p);
    return true;
  }
  if (auto p = findSurface(rw.d, [&](const Cirquent& x, bool) {
        return hasLeafChild(x, Kind::And, unit);
      })) {
    Cirquent s = subcirquentAt(rw.d, *p);
    if (s.right().kind() != unit) rw.applyAt(Rule::Commutativity, Variant::B, *p);
    rw.applyAt(pandRule, Variant::B, *p);
    return true;
  }
  return false;
}

bool stage1(Rewriter& rw) { return constantStep(rw, Kind::Bot, Rule::Identity, Rule::Domination); }

// Distribute a pand (stage 2) or chand (stage 3) disjunct out of a por.
bool distributeStep(Rewriter& rw, Kind childKind, Variant distVariant) {
  auto p = findSurface(rw.d, [&](const Cirquent& x, bool) {
    return x.kind() == Kind::Or &&
           (x.left().kind() == childKind || x.right().kind() == childKind);
  });
  if (!p) return false;
  Cirquent s = subcirquentAt(rw.d, *p);
  if (s.left().kind() != childKind) rw.applyAt(Rule::Commutativity, Variant::A, *p);
  rw.applyAt(Rule::Distribution, distVariant, *p);
  return true;
}

bool stage2(Rewriter& rw) { return distributeStep(rw, Kind::And, Variant::A); }
bool stage3(Rewriter& rw) { return distributeStep(rw, Kind::ChAnd, Variant::B); }

std::vector<Cirquent> combLeaves(const Cirquent& c, const Path& base) {
  return flatten(subcirquentAt(c, base), Kind::Or);
}

Path combNodePath(const Path& base, int i) {
  Path p = base;
  p.insert(p.end(), static_cast<size_t>(i), 1);
  return p;
}

// First complementary pair of literal disjuncts (i < j, opposite signs, same
// letter), scanning for the earliest closing j.
std::optional<std::pair<int, int>> complementaryPair(const std::vector<Cirquent>& leaves) {
  for (size_t j = 0; j < leaves.size(); ++j) {
    if (leaves[j].kind() != Kind::Lit) continue;
    for (size_t i = 0; i < j; ++i) {
      if (leaves[i].kind() != Kind::Lit) continue;
      if (leaves[i].letter() == leaves[j].letter() && leaves[i].positive() != leaves[j].positive())
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return std::nullopt;
}

// Collapses one maximal surface por chain containing a complementary literal
// pair to T: right-comb it with Associativity(a), bubble the pair to the tail
// with Commutativity(a), fire Trivialization, absorb the rest with
// Domination(a).
bool stage4(Rewriter& rw) {
  auto base = findSurface(rw.d, [&](const Cirquent& x, bool parentOr) {
    if (x.kind() != Kind::Or || parentOr) return false;  // maximal chains only
    return complementaryPair(flatten(x, Kind::Or)).has_value();
  });
  if (!base) return false;

  // Right-comb the whole chain.
  std::function<void(int)> comb = [&](int depth) {
    Path p = combNodePath(*base, depth);
    while (subcirquentAt(rw.d, p).left().kind() == Kind::Or)
      rw.applyAt(Rule::Associativity, Variant::A, p);
    if (subcirquentAt(rw.d, p).right().kind() == Kind::Or) comb(depth + 1);
  };
  comb(0);

  std::vector<Cirquent> leaves = combLeaves(rw.d, *base);
  int n = static_cast<int>(leaves.size());
  auto pair = complementaryPair(leaves);
  int pos = leaves[pair->first].positive() ? pair->first : pair->second;
  int neg = pair->first + pair->second - pos;

  // Swap comb leaves k and k+1.
  auto transpose = [&](int k) {
    Path p = combNodePath(*base, k);
    rw.applyAt(Rule::Commutativity, Variant::A, p);
    if (k + 2 < n) {  // node was A_k | (A_{k+1} | rest)
      rw.applyAt(Rule::Associativity, Variant::A, p);
      Path q = p;
      q.push_back(1);
      rw.applyAt(Rule::Commutativity, Variant::A, q);
    }
    if (pos == k) pos = k + 1; else if (pos == k + 1) pos = k;
    if (neg == k) neg = k + 1; else if (neg == k + 1) neg = k;
  };

  while (pos < n - 1) transpose(pos);
  while (neg < n - 2) transpose(neg);

  RuleDescriptor triv;
  triv.rule = Rule::Trivialization;
  triv.path = combNodePath(*base, n - 2);
  triv.letter = leaves[pair->first].letter();
  rw.apply(triv);

  for (int k = n - 3; k >= 0; --k)
    rw.applyAt(Rule::Domination, Variant::A, combNodePath(*base, k));
  return true;
}

bool stage5(Rewriter& rw) { return constantStep(rw, Kind::Top, Rule::Domination, Rule::Identity); }

bool stage6(Rewriter& rw) {
  auto p = findSurface(rw.d, [&](const Cirquent& x, bool) {
    return x.kind() == Kind::And && x.left().kind() == Kind::ChAnd &&
           x.right().kind() == Kind::ChAnd;
  });
  if (!p) return false;
  int fresh = 1;
  while (containsCluster(rw.d, conj(fresh))) ++fresh;
  RuleDescriptor desc;
  desc.rule = Rule::Quadrilemma;
  desc.path = *p;
  desc.cluster = conj(fresh);
  rw.apply(desc);
  return true;
}

std::optional<Path> findCluster(const Cirquent& c, ClusterId cluster) {
  if (c.kind() == Kind::ChAnd && c.cluster() == cluster) return Path{};
  if (!c.isBinary()) return std::nullopt;
  if (auto p = findCluster(c.left(), cluster)) {
    p->insert(p->begin(), 0);
    return p;
  }
  if (auto p = findCluster(c.right(), cluster)) {
    p->insert(p->begin(), 1);
    return p;
  }
  return std::nullopt;
}

bool stage7(Rewriter& rw) {
  if (rw.d.kind() != Kind::ChAnd) return false;
  ClusterId c = rw.d.cluster();
  RuleDescriptor desc;
  desc.rule = Rule::Cleansing;
  desc.path = Path{};
  if (auto p = findCluster(rw.d.left(), c)) {
    desc.variant = Variant::A;
    desc.innerPath = *p;
    rw.apply(desc);
    return true;
  }
  if (auto p = findCluster(rw.d.right(), c)) {
    desc.variant = Variant::B;
    desc.innerPath = *p;
    rw.apply(desc);
    return true;
  }
  return false;
}

}  // namespace

PurifyResult purify(const Cirquent& c) {
  Rewriter rw{c};
  bool (*stages[])(Rewriter&) = {stage1, stage2, stage3, stage4, stage5, stage6, stage7};
  for (int s = 0; s < 7; ++s) {
    rw.stage = s + 1;
    while (true) {
      ++rw.iteration;
      if (!stages[s](rw)) break;
    }
  }
  return {rw.d, std::move(rw.trace)};
}

namespace {

void purityScan(const Cirquent& root, PurityReport& report) {
  // Conditions 1, 2, 3, 5 and the condition-4 chains, one surface walk.
  std::function<void(const Cirquent&, Path&, bool, bool)> go =
      [&](const Cirquent& x, Path& here, bool underOr, bool parentOr) {
        switch (x.kind()) {
          case Kind::Bot:
            if (!here.empty() || root.kind() != Kind::Bot) report.violations.push_back({1, here});
            return;
          case Kind::Top:
            if (!here.empty() || root.kind() != Kind::Top) report.violations.push_back({5, here});
            return;
          case Kind::Lit:
            return;
          case Kind::And:
            if (underOr) report.violations.push_back({2, here});
            break;
          case Kind::ChAnd:
            if (underOr) report.violations.push_back({3, here});
            return;  // not surface below
          case Kind::ChOr:
            return;
          case Kind::Or:
            if (!parentOr && complementaryPair(flatten(x, Kind::Or)))
              report.violations.push_back({4, here});
            break;
        }
        bool childUnderOr = underOr || x.kind() == Kind::Or;
        here.push_back(0);
        go(x.left(), here, childUnderOr, x.kind() == Kind::Or);
        here.back() = 1;
        go(x.right(), here, childUnderOr, x.kind() == Kind::Or);
        here.pop_back();
      };
  Path p;
  go(root, p, false, false);
}

}  // namespace

PurityReport isPure(const Cirquent& c) {
  PurityReport report;
  purityScan(c, report);
  if (c.kind() == Kind::And) {
    std::vector<Cirquent> conjuncts = flatten(c, Kind::And);
    bool allChand = true;
    for (const Cirquent& e : conjuncts)
      if (e.kind() != Kind::ChAnd) allChand = false;
    if (allChand) report.violations.push_back({6, {}});
  }
  if (c.kind() == Kind::ChAnd) {
    if (auto p = findCluster(c.left(), c.cluster())) {
      p->insert(p->begin(), 0);
      report.violations.push_back({7, *p});
    }
    if (auto p = findCluster(c.right(), c.cluster())) {
      p->insert(p->begin(), 1);
      report.violations.push_back({7, *p});
    }
  }
  report.pure = report.violations.empty();
  return report;
}

}  // namespace cl16
