// The rank measure: 1 at leaves, sums at choice nodes, 5^s at pand,
// tetration ^s 5 at por. Exact big-integer arithmetic with a decimal digit
// cap; nothing at runtime depends on rank, it is test instrumentation.

#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "cl16/cirquent.hpp"

namespace cl16 {

using Rank = mpz_class;

inline constexpr long kDefaultRankDigitCap = 100000;

struct RankOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws RankOverflow when any value produced during evaluation exceeds
// digitCap decimal digits.
Rank rank(const Cirquent& c, long digitCap = kDefaultRankDigitCap);

}  // namespace cl16
