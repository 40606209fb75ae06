// Differential sweep: prover vs oracle agreement, proof checking of every
// Valid verdict, and exhaustive policy simulation.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cl16/cirquent.hpp"

namespace cl16 {

struct XcheckOptions {
  int maxNodes = 4;
  int letters = 2;
  int clusters = 2;
  uint64_t sample = 0;  // 0 = exhaustive sweep; otherwise sample size
  uint64_t seed = 20160415;
  int threads = 0;      // 0 = hardware concurrency
  bool runProver = true;
  bool checkProofs = true;    // checkProof every Valid proof
  bool checkPolicies = false; // simulate every oracle policy over all schedules
};

struct XcheckFailure {
  std::string cirquent;
  std::string detail;
};

struct XcheckReport {
  uint64_t total = 0;
  uint64_t oracleValid = 0;
  uint64_t proofsChecked = 0;
  uint64_t policiesSimulated = 0;
  uint64_t failureCount = 0;
  std::vector<XcheckFailure> failures;  // first kMaxRecorded only

  bool ok() const { return failureCount == 0; }
  static constexpr size_t kMaxRecorded = 25;
};

XcheckReport xcheck(const XcheckOptions& options);

}  // namespace cl16
