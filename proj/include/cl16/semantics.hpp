// Runs, legality, resolutions, interpretations, and the win evaluator.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cl16/cirquent.hpp"

namespace cl16 {

enum class Player : uint8_t { Machine, Environment };  // ⊤, ⊥

inline Player flip(Player p) {
  return p == Player::Machine ? Player::Environment : Player::Machine;
}

struct Move {
  ClusterId cluster;
  int choice = 0;  // 0 or 1
};

struct LabeledMove {
  Player player;
  Move move;
};

using Run = std::vector<LabeledMove>;

// Partial map cluster -> chosen side; at most one choice per cluster.
using ResolutionMap = std::map<ClusterId, int>;

// Total assignment over a finite letter set.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::map<Letter, bool> values) : values_(std::move(values)) {}

  void set(const Letter& p, bool v) { values_[p] = v; }
  bool covers(const Letter& p) const { return values_.count(p) != 0; }
  bool at(const Letter& p) const;  // throws on uncovered letter
  const std::map<Letter, bool>& values() const { return values_; }

 private:
  std::map<Letter, bool> values_;
};

// Legality of a run. Condition 1 (every move is c.0 or c.1) is enforced by
// the Move type; reported violations are 2 (a disjunctive-cluster move not
// machine-labeled), 3 (a conjunctive-cluster move not environment-labeled)
// or 4 (a second move in some cluster), with the first offending index.
struct Legality {
  bool ok = true;
  size_t index = 0;
  int condition = 0;
};

Legality checkLegal(const Run& run);

// Pre: checkLegal(run).ok.
ResolutionMap resolutionOf(const Run& run);

// Maps each (pol, n) -> i entry to (dual pol, n) -> i.
ResolutionMap dualResolution(const ResolutionMap& res);

// Definition of the induced game's winner on a (resolution of a) legal run.
// interp must cover lettersOf(c); resolutions of clusters absent from c are
// ignored.
Player winEval(const Cirquent& c, const ResolutionMap& res, const Interpretation& interp);

// True iff the machine wins c under res for all 2^|lettersOf(c)| interpretations.
bool wonUnderAll(const Cirquent& c, const ResolutionMap& res);

// Text formats: runs are `T d1.0; B c2.1` (label T/B, d/c polarity tag);
// interpretations are `p=1,q=0`.
Run parseRun(const std::string& text);
std::string printRun(const Run& run);
Interpretation parseInterpretation(const std::string& text);
std::string printInterpretation(const Interpretation& interp);

// All interpretations over the given letters, in mask order (bit i of the
// mask = truth of letters[i]).
std::vector<Interpretation> allInterpretations(const std::set<Letter>& letters);

}  // namespace cl16
