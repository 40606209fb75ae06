#include "cl16/rank.hpp"

#include <cmath>

namespace cl16 {

namespace {

// log10(5)
constexpr double kLog10Of5 = 0.6989700043360189;

void checkDigits(const Rank& v, long cap) {
  if (static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 10)) > cap)
    throw RankOverflow("rank exceeds the digit cap of " + std::to_string(cap));
}

Rank pow5(const Rank& exponent, long cap) {
  // 5^e has about e*log10(5) digits; refuse before attempting a hopeless pow.
  if (!exponent.fits_ulong_p() ||
      static_cast<double>(exponent.get_ui()) * kLog10Of5 > static_cast<double>(cap) + 1)
    throw RankOverflow("rank exceeds the digit cap of " + std::to_string(cap));
  Rank r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, exponent.get_ui());
  checkDigits(r, cap);
  return r;
}

Rank tower5(const Rank& height, long cap) {
  Rank t = 5;
  for (Rank level = 1; level < height; ++level) t = pow5(t, cap);
  checkDigits(t, cap);
  return t;
}

}  // namespace

Rank rank(const Cirquent& c, long digitCap) {
  switch (c.kind()) {
    case Kind::Top:
    case Kind::Bot:
    case Kind::Lit:
      return 1;
    default: {
      Rank s = rank(c.left(), digitCap) + rank(c.right(), digitCap);
      checkDigits(s, digitCap);
      switch (c.kind()) {
        case Kind::ChOr:
        case Kind::ChAnd:
          return s;
        case Kind::And:
          return pow5(s, digitCap);
        default:
          return tower5(s, digitCap);
      }
    }
  }
}

}  // namespace cl16
