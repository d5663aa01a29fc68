#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "orbipot/error.hpp"

namespace orbipot {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "-8", "31/2".
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0)
    throw DomainError("invalid rational \"" + std::string(text) + "\"");
  if (r.get_den() == 0) throw DomainError("zero denominator in \"" + std::string(text) + "\"");
  r.canonicalize();
  return r;
}

}  // namespace orbipot
