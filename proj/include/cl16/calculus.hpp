// The ten inference rules as checkable conclusion-to-premises transformations,
// proof objects, and the proof checker.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cl16/cirquent.hpp"

namespace cl16 {

enum class Rule : uint8_t {
  Commutativity,
  Associativity,
  Identity,
  Domination,
  Choosing,
  Cleansing,
  Distribution,
  Trivialization,
  Quadrilemma,
  Splitting,
};

enum class Variant : uint8_t { None, A, B };

std::string ruleName(Rule r);
std::optional<Rule> ruleFromName(const std::string& name);

// Which occurrence a rule acts on and with which parameters. Fields present
// exactly as each rule requires:
//   path       all rules except Choosing and Splitting
//   innerPath  Cleansing (position of the inner chand within the chosen arm)
//   cluster    Choosing (the chor cluster), Quadrilemma (the fresh chand
//              cluster), Splitting (the root cluster)
//   choice     Choosing (variant a = 0, b = 1)
//   letter     Trivialization
struct RuleDescriptor {
  Rule rule = Rule::Commutativity;
  Variant variant = Variant::None;
  std::optional<Path> path;
  std::optional<Path> innerPath;
  std::optional<ClusterId> cluster;
  std::optional<int> choice;
  std::optional<Letter> letter;
};

struct RuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The unique premise list the descriptor determines for this conclusion.
// Throws RuleError on a structural mismatch or a violated side condition.
std::vector<Cirquent> premisesOf(const Cirquent& conclusion, const RuleDescriptor& d);

// Replaces every chor node in the given (disjunctive) cluster by the
// recursive image of its i-th child; the result has no occurrence of the
// cluster. Nested same-cluster occurrences inside a discarded child vanish.
Cirquent chooseAll(const Cirquent& c, ClusterId cluster, int choice);

struct Justification {
  bool axiom = false;
  RuleDescriptor descriptor;       // when !axiom
  std::vector<int> premises;       // earlier line indices, in premise order
};

struct ProofLine {
  int index = 0;  // 1-based position
  Cirquent cirquent;
  Justification justification;
};

using Proof = std::vector<ProofLine>;

struct ProofCheck {
  bool ok = false;
  Cirquent conclusion;  // last line when ok
  int errorLine = 0;    // 1-based when !ok
  std::string reason;
};

// ok iff line 1 is the axiom, every axiom line carries top, and every other
// line's cited premises equal premisesOf(line, descriptor) as ASTs, in order.
ProofCheck checkProof(const Proof& proof);

nlohmann::json descriptorToJson(const RuleDescriptor& d);
nlohmann::json proofToJson(const Proof& proof);
Proof proofFromJson(const nlohmann::json& j);

}  // namespace cl16
