#include "cl16/calculus.hpp"

#include <array>

#include "cl16/parse.hpp"

namespace cl16 {

namespace {

const std::array<std::pair<Rule, const char*>, 10> kRuleNames = {{
    {Rule::Commutativity, "commutativity"},
    {Rule::Associativity, "associativity"},
    {Rule::Identity, "identity"},
    {Rule::Domination, "domination"},
    {Rule::Choosing, "choosing"},
    {Rule::Cleansing, "cleansing"},
    {Rule::Distribution, "distribution"},
    {Rule::Trivialization, "trivialization"},
    {Rule::Quadrilemma, "quadrilemma"},
    {Rule::Splitting, "splitting"},
}};

[[noreturn]] void fail(const std::string& what) { throw RuleError(what); }

void needVariant(const RuleDescriptor& d) {
  if (d.variant == Variant::None) fail(ruleName(d.rule) + " needs variant a or b");
}

const Path& needPath(const RuleDescriptor& d) {
  if (!d.path) fail(ruleName(d.rule) + " needs a path");
  return *d.path;
}

Cirquent subtree(const Cirquent& conclusion, const Path& p) {
  try {
    return subcirquentAt(conclusion, p);
  } catch (const PathError& e) {
    fail(e.what());
  }
}

// Kind of the redex's binary connective for an a/b variant rule.
Kind parKindFor(const RuleDescriptor& d) {
  needVariant(d);
  return d.variant == Variant::A ? Kind::Or : Kind::And;
}

Cirquent premiseCommutativity(const Cirquent& s, const RuleDescriptor& d) {
  Kind k = parKindFor(d);
  if (s.kind() != k) fail("commutativity: subtree is not " + std::string(k == Kind::Or ? "por" : "pand") + "-rooted");
  return Cirquent::par(k, s.right(), s.left());
}

Cirquent premiseAssociativity(const Cirquent& s, const RuleDescriptor& d) {
  Kind k = parKindFor(d);
  if (s.kind() != k || s.left().kind() != k)
    fail("associativity: subtree does not have the shape (A op B) op C");
  return Cirquent::par(k, s.left().left(), Cirquent::par(k, s.left().right(), s.right()));
}

Cirquent premiseIdentity(const Cirquent& s, const RuleDescriptor& d) {
  Kind k = parKindFor(d);
  Kind unit = d.variant == Variant::A ? Kind::Bot : Kind::Top;
  if (s.kind() != k || s.right().kind() != unit)
    fail(std::string("identity: subtree is not of the shape A ") +
         (k == Kind::Or ? "| F" : "& T"));
  return s.left();
}

Cirquent premiseDomination(const Cirquent& s, const RuleDescriptor& d) {
  Kind k = parKindFor(d);
  Kind absorber = d.variant == Variant::A ? Kind::Top : Kind::Bot;
  if (s.kind() != k || s.right().kind() != absorber)
    fail(std::string("domination: subtree is not of the shape A ") +
         (k == Kind::Or ? "| T" : "& F"));
  return s.right();
}

Cirquent premiseDistribution(const Cirquent& s, const RuleDescriptor& d) {
  needVariant(d);
  if (s.kind() != Kind::Or) fail("distribution: subtree is not por-rooted");
  Cirquent ab = s.left(), c = s.right();
  if (d.variant == Variant::A) {
    if (ab.kind() != Kind::And) fail("distribution(a): left disjunct is not pand-rooted");
    return Cirquent::pand(Cirquent::por(ab.left(), c), Cirquent::por(ab.right(), c));
  }
  if (ab.kind() != Kind::ChAnd) fail("distribution(b): left disjunct is not chand-rooted");
  return Cirquent::chand(ab.cluster(), Cirquent::por(ab.left(), c), Cirquent::por(ab.right(), c));
}

Cirquent premiseTrivialization(const Cirquent& s, const RuleDescriptor& d) {
  if (!d.letter) fail("trivialization needs a letter");
  if (s.kind() != Kind::Or || s.left().kind() != Kind::Lit || s.right().kind() != Kind::Lit ||
      s.left().positive() || !s.right().positive() || s.left().letter() != *d.letter ||
      s.right().letter() != *d.letter)
    fail("trivialization: subtree is not ~" + *d.letter + " | " + *d.letter);
  return Cirquent::top();
}

Cirquent premiseCleansing(const Cirquent& s, const RuleDescriptor& d) {
  needVariant(d);
  if (!d.innerPath) fail("cleansing needs an inner path");
  if (s.kind() != Kind::ChAnd) fail("cleansing: subtree is not chand-rooted");
  ClusterId c = s.cluster();
  bool leftArm = d.variant == Variant::A;
  Cirquent arm = leftArm ? s.left() : s.right();
  Cirquent inner = [&] {
    try {
      return subcirquentAt(arm, *d.innerPath);
    } catch (const PathError& e) {
      fail(std::string("cleansing: ") + e.what());
    }
  }();
  if (inner.kind() != Kind::ChAnd || inner.cluster() != c)
    fail("cleansing: inner node is not a chand in the root's cluster " + c.str());
  Cirquent newArm = replaceAt(arm, *d.innerPath, leftArm ? inner.left() : inner.right());
  return leftArm ? Cirquent::chand(c, newArm, s.right()) : Cirquent::chand(c, s.left(), newArm);
}

Cirquent premiseQuadrilemma(const Cirquent& conclusion, const Cirquent& s,
                            const RuleDescriptor& d) {
  if (!d.cluster) fail("quadrilemma needs a cluster");
  ClusterId c = *d.cluster;
  if (c.polarity != Polarity::Conjunctive) fail("quadrilemma: cluster must be conjunctive");
  if (containsCluster(conclusion, c))
    fail("quadrilemma: cluster " + c.str() + " occurs in the conclusion");
  if (s.kind() != Kind::And || s.left().kind() != Kind::ChAnd || s.right().kind() != Kind::ChAnd)
    fail("quadrilemma: subtree is not of the shape (A *a B) & (C *b D)");
  Cirquent la = s.left(), rb = s.right();
  ClusterId a = la.cluster(), b = rb.cluster();
  Cirquent first = Cirquent::chand(a, Cirquent::pand(la.left(), rb), Cirquent::pand(la.right(), rb));
  Cirquent second = Cirquent::chand(b, Cirquent::pand(la, rb.left()), Cirquent::pand(la, rb.right()));
  return Cirquent::chand(c, first, second);
}

}  // namespace

std::string ruleName(Rule r) {
  for (const auto& [rule, name] : kRuleNames)
    if (rule == r) return name;
  return "?";
}

std::optional<Rule> ruleFromName(const std::string& name) {
  for (const auto& [rule, n] : kRuleNames)
    if (name == n) return rule;
  return std::nullopt;
}

Cirquent chooseAll(const Cirquent& c, ClusterId cluster, int choice) {
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Lit:
      return c;
    case Kind::ChOr:
      if (c.cluster() == cluster)
        return chooseAll(choice == 0 ? c.left() : c.right(), cluster, choice);
      [[fallthrough]];
    default:
      Cirquent l = chooseAll(c.left(), cluster, choice);
      Cirquent r = chooseAll(c.right(), cluster, choice);
      if (isChoice(c.kind())) return Cirquent::choice(c.kind(), c.cluster(), l, r);
      return Cirquent::par(c.kind(), l, r);
  }
}

std::vector<Cirquent> premisesOf(const Cirquent& conclusion, const RuleDescriptor& d) {
  switch (d.rule) {
    case Rule::Choosing: {
      if (!d.cluster) fail("choosing needs a cluster");
      if (!d.choice) fail("choosing needs a choice");
      if (d.cluster->polarity != Polarity::Disjunctive)
        fail("choosing: cluster must be disjunctive");
      if (*d.choice != 0 && *d.choice != 1) fail("choosing: choice must be 0 or 1");
      if (!containsCluster(conclusion, *d.cluster))
        fail("choosing: cluster " + d.cluster->str() + " does not occur in the conclusion");
      return {chooseAll(conclusion, *d.cluster, *d.choice)};
    }
    case Rule::Splitting: {
      if (!d.cluster) fail("splitting needs a cluster");
      if (conclusion.kind() != Kind::ChAnd || conclusion.cluster() != *d.cluster)
        fail("splitting: conclusion is not chand-rooted in cluster " +
             (d.cluster ? d.cluster->str() : std::string("?")));
      if (containsCluster(conclusion.left(), *d.cluster) ||
          containsCluster(conclusion.right(), *d.cluster))
        fail("splitting: cluster " + d.cluster->str() + " occurs inside a component");
      return {conclusion.left(), conclusion.right()};
    }
    default: {
      const Path& p = needPath(d);
      Cirquent s = subtree(conclusion, p);
      Cirquent premiseSub = [&] {
        switch (d.rule) {
          case Rule::Commutativity: return premiseCommutativity(s, d);
          case Rule::Associativity: return premiseAssociativity(s, d);
          case Rule::Identity: return premiseIdentity(s, d);
          case Rule::Domination: return premiseDomination(s, d);
          case Rule::Distribution: return premiseDistribution(s, d);
          case Rule::Trivialization: return premiseTrivialization(s, d);
          case Rule::Cleansing: return premiseCleansing(s, d);
          case Rule::Quadrilemma: return premiseQuadrilemma(conclusion, s, d);
          default: fail("unknown rule");
        }
      }();
      return {replaceAt(conclusion, p, premiseSub)};
    }
  }
}

ProofCheck checkProof(const Proof& proof) {
  if (proof.empty()) return {false, {}, 0, "empty proof"};
  for (size_t i = 0; i < proof.size(); ++i) {
    const ProofLine& line = proof[i];
    int expectIndex = static_cast<int>(i) + 1;
    if (line.index != expectIndex)
      return {false, {}, expectIndex, "line numbering gap (found index " +
                                          std::to_string(line.index) + ")"};
    if (line.justification.axiom) {
      if (line.cirquent.kind() != Kind::Top)
        return {false, {}, expectIndex, "axiom line is not T"};
      continue;
    }
    if (i == 0) return {false, {}, 1, "line 1 must be the axiom T"};
    std::vector<Cirquent> premises;
    try {
      premises = premisesOf(line.cirquent, line.justification.descriptor);
    } catch (const RuleError& e) {
      return {false, {}, expectIndex, e.what()};
    }
    const std::vector<int>& cited = line.justification.premises;
    if (cited.size() != premises.size())
      return {false, {}, expectIndex,
              ruleName(line.justification.descriptor.rule) + " takes " +
                  std::to_string(premises.size()) + " premise(s), " +
                  std::to_string(cited.size()) + " cited"};
    for (size_t k = 0; k < premises.size(); ++k) {
      int ref = cited[k];
      if (ref < 1 || ref >= expectIndex)
        return {false, {}, expectIndex, "premise index " + std::to_string(ref) + " out of range"};
      if (!(proof[ref - 1].cirquent == premises[k]))
        return {false, {}, expectIndex,
                "premise " + std::to_string(k + 1) + " mismatch: expected \"" +
                    print(premises[k]) + "\", line " + std::to_string(ref) + " is \"" +
                    print(proof[ref - 1].cirquent) + "\""};
    }
  }
  return {true, proof.back().cirquent, 0, ""};
}

namespace {

std::optional<ClusterId> clusterFromToken(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'd' && tok[0] != 'c')) return std::nullopt;
  for (size_t i = 1; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return std::nullopt;
  Polarity pol = tok[0] == 'd' ? Polarity::Disjunctive : Polarity::Conjunctive;
  return ClusterId{pol, std::stoi(tok.substr(1))};
}

}  // namespace

nlohmann::json descriptorToJson(const RuleDescriptor& d) {
  nlohmann::json j;
  j["rule"] = ruleName(d.rule);
  if (d.variant != Variant::None) j["variant"] = d.variant == Variant::A ? "a" : "b";
  if (d.path) j["path"] = pathStr(*d.path);
  if (d.innerPath) j["innerPath"] = pathStr(*d.innerPath);
  if (d.cluster) j["cluster"] = d.cluster->str();
  if (d.choice) j["choice"] = *d.choice;
  if (d.letter) j["letter"] = *d.letter;
  return j;
}

nlohmann::json proofToJson(const Proof& proof) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ProofLine& line : proof) {
    nlohmann::json j;
    j["i"] = line.index;
    j["cirquent"] = print(line.cirquent);
    if (line.justification.axiom) {
      j["rule"] = "axiom";
      j["premises"] = nlohmann::json::array();
    } else {
      nlohmann::json dj = descriptorToJson(line.justification.descriptor);
      j.update(dj);
      j["premises"] = line.justification.premises;
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

Proof proofFromJson(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("proof file: expected a JSON array");
  Proof proof;
  for (const auto& item : j) {
    ProofLine line;
    line.index = item.at("i").get<int>();
    line.cirquent = parse(item.at("cirquent").get<std::string>());
    std::string rule = item.at("rule").get<std::string>();
    if (rule == "axiom") {
      line.justification.axiom = true;
    } else {
      auto r = ruleFromName(rule);
      if (!r) throw std::invalid_argument("proof file: unknown rule \"" + rule + "\"");
      RuleDescriptor d;
      d.rule = *r;
      if (item.contains("variant")) {
        std::string v = item.at("variant").get<std::string>();
        if (v != "a" && v != "b") throw std::invalid_argument("proof file: bad variant \"" + v + "\"");
        d.variant = v == "a" ? Variant::A : Variant::B;
      }
      if (item.contains("path")) d.path = parsePath(item.at("path").get<std::string>());
      if (item.contains("innerPath")) d.innerPath = parsePath(item.at("innerPath").get<std::string>());
      if (item.contains("cluster")) {
        auto cl = clusterFromToken(item.at("cluster").get<std::string>());
        if (!cl) throw std::invalid_argument("proof file: bad cluster token");
        d.cluster = *cl;
      }
      if (item.contains("choice")) d.choice = item.at("choice").get<int>();
      if (item.contains("letter")) d.letter = item.at("letter").get<std::string>();
      // Choosing may be written with variant a/b instead of an explicit choice.
      if (d.rule == Rule::Choosing && !d.choice && d.variant != Variant::None)
        d.choice = d.variant == Variant::A ? 0 : 1;
      line.justification.descriptor = std::move(d);
      line.justification.premises = item.at("premises").get<std::vector<int>>();
    }
    proof.push_back(std::move(line));
  }
  return proof;
}

}  // namespace cl16
