// Decision procedure for validity following the constructive completeness
// argument; emits checker-valid proofs for valid cirquents.

#pragma once

#include <optional>
#include <string>

#include "cl16/calculus.hpp"
#include "cl16/purify.hpp"

namespace cl16 {

struct Verdict {
  bool valid = false;
  std::optional<Proof> proof;  // when valid; passes checkProof with the queried conclusion
  std::string reason;          // when invalid: the rejecting case
};

Verdict prove(const Cirquent& a);

// Appends, for each trace step in reverse, a line whose cirquent is the
// step's `before`, justified by the step's descriptor citing the previous
// line. proofOfFinal must conclude with the trace's final cirquent.
Proof derivationFromTrace(const PurificationTrace& trace, Proof proofOfFinal);

}  // namespace cl16
