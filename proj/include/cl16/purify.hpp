// Purity (seven conditions) and the Purification procedure with a replayable
// conclusion-to-premise rule trace.

#pragma once

#include <vector>

#include "cl16/calculus.hpp"
#include "cl16/cirquent.hpp"

namespace cl16 {

struct PurityViolation {
  int condition = 0;  // 1..7
  Path path;          // witnessing occurrence
};

struct PurityReport {
  bool pure = true;
  std::vector<PurityViolation> violations;
};

PurityReport isPure(const Cirquent& c);

// One rewrite: premisesOf(before, descriptor) == [after]. stage/iteration
// locate the step inside the procedure; an iteration is one loop-body
// execution of a stage and may span several steps (the rank measure strictly
// decreases per iteration, not per step).
struct TraceStep {
  Cirquent before;
  RuleDescriptor descriptor;
  Cirquent after;
  int stage = 0;
  int iteration = 0;
};

using PurificationTrace = std::vector<TraceStep>;

struct PurifyResult {
  Cirquent pure;
  PurificationTrace trace;
};

// Stages 1..7 in order, each iterated to fixpoint, leftmost-outermost redex
// first; the result satisfies isPure.
PurifyResult purify(const Cirquent& c);

}  // namespace cl16
