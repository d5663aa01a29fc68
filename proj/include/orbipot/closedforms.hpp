#pragma once

// Closed-form potentials: the elliptic cases (2,3,6) and (2,4,4) as lattice
// sums, and the spherical cases (2,2,r), (2,3,3), (2,3,4), (2,3,5).

#include <map>
#include <string>
#include <vector>

#include "orbipot/potential.hpp"
#include "orbipot/qseries.hpp"

namespace orbipot {

enum class EllipticCase { c236 = 236, c244 = 244 };

inline EllipticCase elliptic_case(int code) {
  if (code == 236) return EllipticCase::c236;
  if (code == 244) return EllipticCase::c244;
  throw DomainError("unknown elliptic case " + std::to_string(code) + " (expected 236 or 244)");
}

inline Signature signature_of(EllipticCase c) {
  return c == EllipticCase::c236 ? Signature(2, 3, 6) : Signature(2, 4, 4);
}

/// A coefficient series attached to the monomial x^P y^Q z^R.
struct MonomialSeries {
  std::string name;
  int P = 0;
  int Q = 0;
  int R = 0;
  QSeries series;
};

struct EllipticPotential {
  EllipticCase kind = EllipticCase::c236;
  long qmax = 0;
  Potential fixed;                     // q^6 x^2 - q xyz
  std::vector<MonomialSeries> series;  // every exponent <= qmax is complete

  const QSeries& get(const std::string& name) const {
    for (const auto& s : series)
      if (s.name == name) return s.series;
    throw DomainError("no series named " + name);
  }
};

/// C(n+2,2) - C(a+1,2) - C(b+1,2) - C(c+1,2), with C(m,2) = 0 for m < 2.
inline long hex_count_A(long n, long a, long b, long c) {
  auto c2 = [](long m) { return m < 2 ? 0L : m * (m - 1) / 2; };
  return c2(n + 2) - c2(a + 1) - c2(b + 1) - c2(c + 1);
}

namespace detail {

inline Potential elliptic_fixed_terms() {
  Potential W;
  W.add(PotentialTerm{Rational(1), 2, 0, 0, 6});
  W.add(PotentialTerm{Rational(-1), 1, 1, 1, 1});
  return W;
}

class SeriesAccumulator {
 public:
  explicit SeriesAccumulator(long qmax) : qmax_(qmax) {}
  void add(long e, long c) {
    if (e > qmax_) return;
    terms_[e] += c;
  }
  QSeries build() const {
    std::map<long, Rational> nz;
    for (const auto& [e, c] : terms_)
      if (c != 0) nz.emplace(e, c);
    return QSeries::from_terms(nz, qmax_);
  }

 private:
  long qmax_;
  std::map<long, Rational> terms_;
};

inline long sign_of(long k) { return (k % 2 == 0) ? 1 : -1; }

/// Largest n with 48(n+1) + offset <= qmax; every family below has
/// 48 A + offset >= 48(n+1) + offset.
inline long n_bound(long qmax, long offset) { return std::max(-1L, (qmax - offset) / 48 - 1); }

}  // namespace detail

inline EllipticPotential elliptic_236(long qmax) {
  if (qmax < 1) throw DomainError("qmax must be >= 1");
  using detail::sign_of;
  EllipticPotential out;
  out.kind = EllipticCase::c236;
  out.qmax = qmax;
  out.fixed = detail::elliptic_fixed_terms();

  detail::SeriesAccumulator cy(qmax), cz(qmax), cyz2(qmax), cyz4(qmax);

  // exponent 24 a (a+1) + 9
  for (long a = 0; 48 * hex_count_A(a - 1, 0, 0, 0) + 9 <= qmax; ++a)
    cy.add(48 * hex_count_A(a - 1, 0, 0, 0) + 9, sign_of(a + 1) * (2 * a + 1));

  for (long n = 0; n <= detail::n_bound(qmax, -4); ++n)
    for (long a = 0; a <= n; ++a) {
      cyz2.add(48 * hex_count_A(n, a, 0, 0) - 4, sign_of(n - a) * (6 * n - 2 * a + 8));
      cyz2.add(48 * hex_count_A(n, a, n - a, 0) - 4, 2 * n + 4);
    }

  for (long n = 0; n <= detail::n_bound(qmax, -17); ++n)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; a + b <= n; ++b)
        cyz4.add(48 * hex_count_A(n, a, b, 0) - 17, sign_of(n - a - b) * (6 * n - 2 * a - 2 * b + 7));

  // c_z over T6 + T3 + T2 + T1; all have n >= a+b+c.
  auto cz_term = [&](long n, long a, long b, long c, long eta) {
    const long raw = 6 * n - 2 * a - 2 * b - 2 * c + 6;
    if (raw % eta != 0) throw DomainError("symmetry violation in c_z at (" + std::to_string(n) + ")");
    cz.add(48 * hex_count_A(n, a, b, c) - 30, sign_of(n - a - b - c) * raw / eta);
  };
  const long nmax = detail::n_bound(qmax, -30);
  for (long n = 0; n <= nmax; ++n)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; a + b <= n; ++b)
        for (long c = 0; a + b + c <= n; ++c) {
          const bool rep = a < std::min(b, c) || (a == c && a < b);
          if (a == b && b == c) {
            cz_term(n, a, a, a, n == 3 * a ? 6 : 3);
          } else if (rep) {
            cz_term(n, a, b, c, n == a + b + c ? 2 : 1);
          }
        }

  out.series.push_back({"c_y", 0, 3, 0, cy.build()});
  out.series.push_back({"c_z", 0, 0, 6, cz.build()});
  out.series.push_back({"c_yz2", 0, 2, 2, cyz2.build()});
  out.series.push_back({"c_yz4", 0, 1, 4, cyz4.build()});
  return out;
}

inline EllipticPotential elliptic_244(long qmax) {
  if (qmax < 1) throw DomainError("qmax must be >= 1");
  EllipticPotential out;
  out.kind = EllipticCase::c244;
  out.qmax = qmax;
  out.fixed = detail::elliptic_fixed_terms();

  detail::SeriesAccumulator dy(qmax), dyz(qmax);
  for (long r = 0; 16 * (2 * r + 1) * (2 * r + 1) - 4 <= qmax; ++r) {
    dy.add(16 * (2 * r + 1) * (2 * r + 1) - 4, 2 * r + 1);
    for (long s = r + 1; 16 * (2 * r + 1) * (2 * s + 1) - 4 <= qmax; ++s)
      dy.add(16 * (2 * r + 1) * (2 * s + 1) - 4, 2 * r + 2 * s + 2);
  }
  for (long r = 1; 16 * (2 * r - 1) * 2 - 4 <= qmax; ++r)
    for (long s = 1; 16 * (2 * r - 1) * 2 * s - 4 <= qmax; ++s) {
      dyz.add(16 * (2 * r - 1) * 2 * s - 4, -(4 * r + 4 * s - 2));
      dyz.add(64 * r * s - 4, 2 * r + 2 * s);
    }

  const QSeries d_y = dy.build();
  out.series.push_back({"d_y", 0, 4, 0, d_y});
  out.series.push_back({"d_z", 0, 0, 4, d_y});
  out.series.push_back({"d_yz", 0, 2, 2, dyz.build()});
  return out;
}

inline EllipticPotential elliptic_closed_form(EllipticCase c, long qmax) {
  return c == EllipticCase::c236 ? elliptic_236(qmax) : elliptic_244(qmax);
}

/// P/a + Q/b + R/c == 1.
inline bool satisfies_exponent_law(int P, int Q, int R, const Signature& sig) {
  return make_rational(P, sig.a) + make_rational(Q, sig.b) + make_rational(R, sig.c) == 1;
}

// ---------------------------------------------------------------------------
// Spherical cases.

namespace detail {

inline Integer factorial(long n) {
  Integer f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace detail

/// Magnitude of the z^{r-2k} coefficient in the (2,2,r) potential:
/// r (r-k-1)! / (k! (r-2k)!).
inline Integer d_type_coefficient(long r, long k) {
  if (r < 2 || k < 1 || 2 * k > r) throw DomainError("need r >= 2 and 1 <= k <= r/2");
  Rational v(Integer(r) * detail::factorial(r - k - 1), detail::factorial(k) * detail::factorial(r - 2 * k));
  v.canonicalize();
  if (!is_integer(v)) throw DomainError("non-integral D-type coefficient");
  return v.get_num();
}

/// Number of k-subsets of the sides of an r-gon with no two cyclically
/// adjacent, by exhaustive bitmask enumeration.
inline long resolution_count_oracle(int r, int k) {
  if (r < 2 || r > 30 || k < 1 || 2 * k > r) throw DomainError("resolution count needs 2 <= r <= 30, 1 <= k <= r/2");
  long count = 0;
  const unsigned long full = (1UL << r) - 1;
  for (unsigned long m = 0; m <= full; ++m) {
    if (__builtin_popcountl(m) != k) continue;
    const unsigned long rot = ((m << 1) | (m >> (r - 1))) & full;
    if ((m & rot) == 0) ++count;
  }
  return count;
}

/// Combinations with repetition: C(k + m - 1, m).
inline Integer multiset_count(long k, long m) { return detail::binomial(k + m - 1, m); }

inline Potential spherical(const Signature& sig) {
  if (sig.kind() != SignatureKind::spherical)
    throw DomainError("spherical potential needs a spherical signature, got " + std::string(to_string(sig.kind())) +
                      " " + sig.to_string());
  if (sig.a != 2 || sig.b > sig.c)
    throw DomainError("spherical signatures must be given as (2,2,r) or (2,3,c) with c in {3,4,5}, got " +
                      sig.to_string());
  Potential W;
  auto add = [&](long coeff, int P, int Q, int R, long qpow) { W.add(PotentialTerm{Rational(coeff), P, Q, R, qpow}); };
  add(-1, 1, 1, 1, 1);
  add(1, 2, 0, 0, 6);

  if (sig.b == 2) {
    const int r = sig.c;
    add(1, 0, 2, 0, 6);
    add(r % 2 == 0 ? 1 : -1, 0, 0, r, 3L * r);
    for (int k = 1; 2 * k <= r; ++k) {
      const long sign = ((r + k) % 2 == 0) ? 1 : -1;
      W.add(PotentialTerm{Rational(d_type_coefficient(r, k) * sign), 0, 0, r - 2 * k, 3L * r + 10L * k});
    }
    return W;
  }

  switch (sig.c) {
    case 3:
      add(-1, 0, 3, 0, 9);
      add(-1, 0, 0, 3, 9);
      add(-4, 0, 1, 1, 22);
      add(2, 0, 0, 0, 48);
      break;
    case 4:
      add(-1, 0, 3, 0, 9);
      add(1, 0, 0, 4, 12);
      add(5, 0, 1, 2, 25);
      add(3, 0, 0, 2, 54);
      add(3, 0, 2, 0, 38);
      add(-2, 0, 0, 0, 96);
      break;
    case 5:
      add(-1, 0, 3, 0, 9);
      add(-1, 0, 0, 5, 15);
      add(4, 0, 0, 4, 60);
      add(-3, 0, 0, 3, 105);
      add(5, 0, 0, 2, 150);
      add(-6, 0, 1, 3, 28);
      add(-9, 0, 1, 2, 73);
      add(-7, 0, 2, 1, 41);
      add(5, 0, 2, 0, 86);
      add(-2, 0, 0, 0, 240);
      break;
    default:
      throw DomainError("unsupported spherical signature " + sig.to_string());
  }
  return W;
}

}  // namespace orbipot
