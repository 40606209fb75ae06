// Exhaustive and sampled cirquent generation for the differential harness.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cl16/cirquent.hpp"

namespace cl16 {

// First k letters of the harness alphabet: p, q, r, s, ...
std::vector<Letter> defaultLetters(int k);

// First m clusters of the alternating pool d1, c1, d2, c2, ...
std::vector<ClusterId> defaultClusters(int m);

// All cirquents with at most maxNodes connective nodes whose leaves are T, F
// and the given letters' literals and whose choice connectives use the given
// clusters. Indexing is stable: sizes ascending, then a mixed-radix code over
// (connective, split, left index, right index).
class Enumerator {
 public:
  Enumerator(int maxNodes, std::vector<Letter> letters, std::vector<ClusterId> clusters);

  uint64_t total() const { return cumulative_.back(); }
  uint64_t countOfSize(int n) const { return counts_[n]; }
  Cirquent at(uint64_t index) const;

  Cirquent sample(std::mt19937_64& rng) const;

 private:
  struct Op {
    Kind kind;
    ClusterId cluster;
  };

  Cirquent decode(int size, uint64_t index) const;

  std::vector<Cirquent> leaves_;
  std::vector<Op> ops_;
  std::vector<uint64_t> counts_;      // per size 0..maxNodes
  std::vector<uint64_t> splitTotal_;  // sum over i+j == n-1 of counts_[i]*counts_[j]
  std::vector<uint64_t> cumulative_;  // sizes 0..n inclusive
};

}  // namespace cl16
