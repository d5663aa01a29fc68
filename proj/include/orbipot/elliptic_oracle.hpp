#pragma once

// Brute-force cross-check of the elliptic closed forms. Every polygon shape
// (lattice triangle, trapezoid, parallelogram, pentagon, hexagon for
// (2,3,6); rectangles for (2,4,4)) is turned into its boundary word, words
// are deduplicated by canonical rotation, and each distinct word contributes
// the term read off from its own corner data. Lattice points and unit cells
// are counted by enumeration.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "orbipot/closedforms.hpp"
#include "orbipot/potential.hpp"
#include "orbipot/words.hpp"

namespace orbipot {

/// One distinct polygon found by the oracle.
struct OracleShape {
  std::string family;
  std::vector<long> params;  // parameters of the first tuple that produced it
  CyclicWord word;
  PotentialTerm term;
};

namespace detail {

inline std::string pow_block(std::string_view block, long n) {
  std::string s;
  for (long i = 0; i < n; ++i) s.append(block);
  return s;
}

/// Points (i,j,k) >= 0 with i+j+k = n, i <= n-a, j <= n-b, k <= n-c: the
/// triangle of side n with corner triangles of sides a-1, b-1, c-1 removed.
inline long count_hexagon_points(long n, long a, long b, long c) {
  long count = 0;
  for (long i = 0; i <= n; ++i)
    for (long j = 0; i + j <= n; ++j) {
      const long k = n - i - j;
      if (i <= n - a && j <= n - b && k <= n - c) ++count;
    }
  return count;
}

inline long count_parallelogram_points(long m1, long m2) {
  long count = 0;
  for (long i = 0; i <= m1; ++i)
    for (long j = 0; j <= m2; ++j) ++count;
  return count;
}

inline long count_cells(long m1, long m2) {
  long count = 0;
  for (long i = 0; i < m1; ++i)
    for (long j = 0; j < m2; ++j) ++count;
  return count;
}

/// Sign and weight from the word, area supplied by the caller.
inline PotentialTerm oracle_term(const CyclicWord& w, long area) {
  const CornerData cd = corner_counts(w);
  const long weight = 2L * cd.p + cd.S;
  if (weight % cd.eta != 0) throw DomainError("symmetry violation in oracle word " + w.letters());
  const long sign = ((cd.p + cd.Q + cd.R) % 2 == 0) ? 1 : -1;
  return PotentialTerm{Rational(sign * weight / cd.eta), cd.P, cd.Q, cd.R, area};
}

class ShapeCollector {
 public:
  explicit ShapeCollector(long qmax) : qmax_(qmax) {}

  void offer(const std::string& family, std::vector<long> params, const std::string& letters, long area) {
    if (area > qmax_) return;
    CyclicWord w(letters);
    auto it = shapes_.find(w);
    if (it != shapes_.end()) {
      if (it->second.term.qpow != area)
        throw DomainError("oracle inconsistency: one word with two areas (" + w.letters() + ")");
      return;
    }
    OracleShape s{family, std::move(params), w, oracle_term(w, area)};
    shapes_.emplace(std::move(w), std::move(s));
  }

  std::vector<OracleShape> shapes() const {
    std::vector<OracleShape> out;
    for (const auto& [w, s] : shapes_) out.push_back(s);
    return out;
  }

 private:
  long qmax_;
  std::map<CyclicWord, OracleShape> shapes_;
};

inline std::vector<OracleShape> shapes_236(long qmax) {
  ShapeCollector col(qmax);
  const std::string gba = "cba", agb = "acb";
  auto area_of = [](const std::string& letters, long vC) {
    const CornerData cd = corner_counts(CyclicWord(letters));
    return 48 * vC + 3L * cd.S - 8L * cd.R;
  };
  // every family has at least n+1 C-vertices
  const long nmax = (qmax + 30) / 48 + 1;

  for (long a = 0; a <= nmax + 1; ++a) {
    const std::string w = pow_block("a" + pow_block(gba, a) + "c", 3);
    col.offer("y3-triangle", {a}, w, area_of(w, count_hexagon_points(a - 1, 0, 0, 0)));
  }

  for (long n = 0; n <= nmax; ++n)
    for (long a = 0; a <= n; ++a) {
      const std::string trap = "a" + pow_block(gba, n - a) + "cba" + "b" + pow_block(agb, a) + "a" + "b" +
                               pow_block(agb, n - a) + "ac" + "a" + pow_block(gba, n + 1) + "c";
      col.offer("y2z2-trapezoid", {n, a}, trap, area_of(trap, count_hexagon_points(n, a, 0, 0)));
      const std::string para = pow_block("a" + pow_block(gba, a + 1) + pow_block("bac", n - a + 1), 2);
      col.offer("y2z2-parallelogram", {n, a}, para, area_of(para, count_parallelogram_points(a, n - a)));
    }

  for (long n = 0; n <= nmax; ++n)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; a + b <= n; ++b) {
        const std::string w = "a" + pow_block(gba, n - b + 1) + "b" + pow_block(agb, b) + "a" + "b" +
                              pow_block(agb, n - a - b) + "a" + "b" + pow_block(agb, a) + "a" + "b" +
                              pow_block(agb, n - a) + "ac";
        col.offer("yz4-pentagon", {n, a, b}, w, area_of(w, count_hexagon_points(n, a, b, 0)));
      }

  // Hexagons: every (n,a,b,c) with nonnegative sides, no representative
  // selection; duplicates collapse on the canonical word.
  for (long n = 0; n <= 2 * nmax; ++n)
    for (long a = 0; a <= n; ++a)
      for (long b = 0; a + b <= n; ++b)
        for (long c = 0; b + c <= n && c + a <= n; ++c) {
          const long r[6] = {a, n - a - b, b, n - b - c, c, n - c - a};
          std::string w;
          for (long rj : r) w += "b" + pow_block(agb, rj) + "a";
          col.offer("z6-hexagon", {n, a, b, c}, w, area_of(w, count_hexagon_points(n, a, b, c)));
        }
  return col.shapes();
}

inline std::vector<OracleShape> shapes_244(long qmax) {
  ShapeCollector col(qmax);
  const long mmax = (qmax + 4) / 16 + 1;
  auto area = [](long m1, long m2) { return 16 * count_cells(m1, m2) - 4; };
  for (long r = 0; 2 * r + 1 <= mmax; ++r)
    for (long s = 0; 2 * s + 1 <= mmax; ++s) {
      const long m1 = 2 * r + 1, m2 = 2 * s + 1;
      col.offer("y4-rectangle", {r, s},
                pow_block(pow_block("acb", r) + "ac" + pow_block("acb", s) + "ac", 2), area(m1, m2));
      col.offer("z4-rectangle", {r, s},
                pow_block(pow_block("bac", r) + "ba" + pow_block("bac", s) + "ba", 2), area(m1, m2));
    }
  for (long r = 0; 2 * r + 1 <= mmax; ++r)
    for (long s = 1; 2 * s <= mmax; ++s)
      col.offer("y2z2-adjacent", {r, s},
                pow_block("acb", r) + "ac" + pow_block("acb", s) + "a" + pow_block("bac", r) + "ba" +
                    pow_block("bac", s),
                area(2 * r + 1, 2 * s));
  for (long r = 1; 2 * r <= mmax; ++r)
    for (long s = 1; 2 * s <= mmax; ++s)
      col.offer("y2z2-opposite", {r, s}, pow_block(pow_block("acb", r) + "a" + pow_block("bac", s), 2),
                area(2 * r, 2 * s));
  return col.shapes();
}

}  // namespace detail

inline std::vector<OracleShape> elliptic_oracle_shapes(EllipticCase c, long qmax) {
  return c == EllipticCase::c236 ? detail::shapes_236(qmax) : detail::shapes_244(qmax);
}

/// Same layout as the closed form, aggregated from the distinct shapes.
/// Series are keyed by the monomial each word actually carries.
inline EllipticPotential elliptic_oracle(EllipticCase c, long qmax) {
  if (qmax < 1) throw DomainError("qmax must be >= 1");
  EllipticPotential reference = elliptic_closed_form(c, 1);
  std::map<std::tuple<int, int, int>, std::map<long, Rational>> acc;
  for (const auto& s : elliptic_oracle_shapes(c, qmax)) {
    Rational& slot = acc[{s.term.P, s.term.Q, s.term.R}][s.term.qpow];
    slot += s.term.coeff;
  }
  EllipticPotential out;
  out.kind = c;
  out.qmax = qmax;
  out.fixed = detail::elliptic_fixed_terms();
  for (const auto& ms : reference.series) {
    auto it = acc.find({ms.P, ms.Q, ms.R});
    std::map<long, Rational> terms;
    if (it != acc.end()) {
      for (const auto& [e, v] : it->second)
        if (v != 0) terms.emplace(e, v);
      acc.erase(it);
    }
    out.series.push_back({ms.name, ms.P, ms.Q, ms.R, QSeries::from_terms(terms, qmax)});
  }
  if (!acc.empty()) {
    const auto& [P, Q, R] = acc.begin()->first;
    throw DomainError("oracle produced an unexpected monomial x^" + std::to_string(P) + " y^" + std::to_string(Q) +
                      " z^" + std::to_string(R));
  }
  return out;
}

}  // namespace orbipot
