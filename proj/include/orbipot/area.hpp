#pragma once

#include "orbipot/rational.hpp"
#include "orbipot/words.hpp"

namespace orbipot {

/// Area, in units of the minimal xyz triangle, of a polygon with P x-, Q y-
/// and R z-corners:
///   3(P+Q+R) + 8 (P/a + Q/b + R/c - 1) / (1 - 1/a - 1/b - 1/c).
/// Undefined for elliptic signatures, where the denominator vanishes.
inline Rational area(long P, long Q, long R, const Signature& sig) {
  if (sig.kind() == SignatureKind::elliptic)
    throw DomainError("area formula degenerate for elliptic signature " + sig.to_string());
  const long a = sig.a, b = sig.b, c = sig.c;
  // Multiply numerator and denominator of the fraction by abc.
  const Integer num = Integer(8) * (Integer(P) * b * c + Integer(Q) * a * c + Integer(R) * a * b - Integer(a) * b * c);
  const Integer den = Integer(a) * b * c - Integer(b) * c - Integer(a) * c - Integer(a) * b;
  Rational frac(num, den);
  frac.canonicalize();
  return Rational(3 * (P + Q + R)) + frac;
}

}  // namespace orbipot
