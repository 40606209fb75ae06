// Brute-force decision of uniform validity by AND-OR search over resolution
// states, with machine-policy extraction and best-effort refutations.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cl16/cirquent.hpp"
#include "cl16/semantics.hpp"

namespace cl16 {

struct OracleCaps {
  int maxClusters = 12;
  int maxLetters = 10;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Action {
  bool wait = true;
  ClusterId cluster{};  // when !wait: an unresolved disjunctive cluster
  int choice = 0;

  static Action waiting() { return {}; }
  static Action resolve(ClusterId c, int i) { return {false, c, i}; }
  std::string str() const;  // "wait" / "d1.0"
};

// Machine strategy over one cirquent's resolution states; defined on every
// state reachable under the policy itself from the empty resolution, under
// arbitrary environment moves.
class Policy {
 public:
  Policy() = default;
  explicit Policy(std::vector<ClusterId> clusters) : clusters_(std::move(clusters)) {}

  const std::vector<ClusterId>& clusters() const { return clusters_; }
  void define(const ResolutionMap& state, Action a);
  Action at(const ResolutionMap& state) const;  // throws std::out_of_range if undefined
  bool defined(const ResolutionMap& state) const;

  // One line per state, `state {d1=0,c2=?} -> wait`, sorted lexicographically.
  std::string dump() const;

 private:
  std::vector<ClusterId> clusters_;  // sorted
  std::map<std::vector<int8_t>, Action> actions_;

  std::vector<int8_t> key(const ResolutionMap& state) const;
};

// Environment strategy tree witnessing invalidity: at each node either the
// environment stops (with a falsifying interpretation for the reached state)
// or makes a conjunctive move; machineBranches cover every disjunctive move
// the machine could try instead.
struct Refutation {
  ResolutionMap state;
  bool envStops = true;
  Interpretation falsifying;                  // when envStops
  ClusterId envCluster{};                     // when !envStops
  int envChoice = 0;
  std::unique_ptr<Refutation> envChild;       // when !envStops
  std::vector<std::pair<Move, std::unique_ptr<Refutation>>> machineBranches;
};

struct OracleResult {
  bool valid = false;
  std::optional<Policy> policy;          // when valid
  std::unique_ptr<Refutation> refutation;  // when invalid and requested
};

OracleResult decideUniform(const Cirquent& c, const OracleCaps& caps = {},
                           bool wantRefutation = false, bool wantPolicy = true);

struct SimulationResult {
  ResolutionMap finalState;
  std::vector<std::pair<Interpretation, Player>> winners;  // one entry per interpretation
  bool wonUnderAll = false;
};

// Alternates policy actions (to a Wait) with the scheduled environment moves;
// throws std::out_of_range if the policy is undefined on a reached state.
SimulationResult simulate(const Cirquent& c, const Policy& policy,
                          const std::vector<std::pair<ClusterId, int>>& envSchedule);

// Every environment schedule over the cirquent's conjunctive clusters (all
// orders, all choices, all prefixes stopped early); used to exercise a policy
// exhaustively.
std::vector<std::vector<std::pair<ClusterId, int>>> allEnvSchedules(const Cirquent& c);

// Best-effort action for cirquents without a winning policy: the move (or
// wait) maximizing the number of interpretations under which the current
// state is won; ties prefer waiting, then the least cluster index, then
// choice 0.
Action greedyAction(const Cirquent& c, const ResolutionMap& state);

}  // namespace cl16
