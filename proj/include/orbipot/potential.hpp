#pragma once

// Words to potential terms, assembly of the hyperbolic potential, and the
// cell counts of the diagram attached to a polygon.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "orbipot/area.hpp"
#include "orbipot/cutglue.hpp"
#include "orbipot/rational.hpp"
#include "orbipot/words.hpp"

namespace orbipot {

/// coeff * x^P y^Q z^R q^qpow.
struct PotentialTerm {
  Rational coeff;
  int P = 0;
  int Q = 0;
  int R = 0;
  long qpow = 0;

  friend bool operator==(const PotentialTerm& l, const PotentialTerm& r) {
    return l.coeff == r.coeff && l.P == r.P && l.Q == r.Q && l.R == r.R && l.qpow == r.qpow;
  }
};

/// Sort key (qpow, P, Q, R).
struct MonomialKey {
  long qpow = 0;
  int P = 0;
  int Q = 0;
  int R = 0;

  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
};

class Potential {
 public:
  void add(const PotentialTerm& t) { add(MonomialKey{t.qpow, t.P, t.Q, t.R}, t.coeff); }

  void add(const MonomialKey& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Potential& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
  }

  /// Coefficient of x^P y^Q z^R q^qpow (zero when absent).
  Rational coeff(int P, int Q, int R, long qpow) const {
    auto it = terms_.find(MonomialKey{qpow, P, Q, R});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::vector<PotentialTerm> terms() const {
    std::vector<PotentialTerm> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.push_back({c, k.P, k.Q, k.R, k.qpow});
    return out;
  }

  const std::map<MonomialKey, Rational>& map() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const Potential&, const Potential&) = default;

 private:
  std::map<MonomialKey, Rational> terms_;
};

/// Area of the polygon as an integer number of minimal-triangle units.
inline long integral_area(int P, int Q, int R, const Signature& sig) {
  const Rational ar = area(P, Q, R, sig);
  if (!is_integer(ar))
    throw DomainError("non-integer area " + to_string(ar) + " for corner data (" + std::to_string(P) + "," +
                      std::to_string(Q) + "," + std::to_string(R) + ") on " + sig.to_string());
  return ar.get_num().get_si();
}

/// Sign (-1)^{p+Q+R}, weight (2p+S) / eta, exponents (P,Q,R), q-power = area.
inline PotentialTerm term_of_word(const CyclicWord& w, const Signature& sig) {
  const CornerData cd = corner_counts(w);
  const long weight = 2L * cd.p + cd.S;
  if (weight % cd.eta != 0)
    throw DomainError("symmetry violation: eta=" + std::to_string(cd.eta) + " does not divide 2p+S=" +
                      std::to_string(weight) + " for word " + w.letters());
  const long sign = ((cd.p + cd.Q + cd.R) % 2 == 0) ? 1 : -1;
  PotentialTerm t;
  t.coeff = Rational(sign * (weight / cd.eta));
  t.P = cd.P;
  t.Q = cd.Q;
  t.R = cd.R;
  t.qpow = integral_area(cd.P, cd.Q, cd.R, sig);
  return t;
}

inline Potential assemble(const std::vector<GenerationSet>& gens, const Signature& sig) {
  Potential W;
  for (const auto& g : gens)
    for (const auto& w : g.words) W.add(term_of_word(w, sig));
  return W;
}

/// Sum over all words of generation <= max_p.
inline Potential potential_by_generation(const Signature& sig, int max_p, const EnumerationOptions& opt = {}) {
  return assemble(generations(sig, StopPolicy::max_generation(max_p), opt), sig);
}

/// Every term with q-power <= max_qpow (pruned search; complete because
/// areas strictly increase along cut-glue moves).
inline Potential potential_by_qpower(const Signature& sig, long max_qpow, const EnumerationOptions& opt = {}) {
  Potential W;
  for (const auto& g : generations(sig, StopPolicy::max_qpower(max_qpow), opt))
    for (const auto& w : g.words) {
      const PotentialTerm t = term_of_word(w, sig);
      if (t.qpow <= max_qpow) W.add(t);
    }
  return W;
}

/// Per generation, the sum of |coeff| * t^(P+Q+R+qpow) over its words, i.e.
/// the absolute series evaluated at x = y = z = q = t. Exact.
inline std::vector<Rational> generation_abs_sums(const std::vector<GenerationSet>& gens, const Signature& sig,
                                                 const Rational& t) {
  std::vector<Rational> out;
  for (const auto& g : gens) {
    Rational sum = 0;
    for (const auto& w : g.words) {
      const PotentialTerm term = term_of_word(w, sig);
      Rational power = 1;
      for (long i = 0; i < term.P + term.Q + term.R + term.qpow; ++i) power *= t;
      sum += abs(term.coeff) * power;
    }
    out.push_back(sum);
  }
  return out;
}

// ---------------------------------------------------------------------------

/// Cell counts of the diagram of a polygon: interior W-vertices v_W, A/B/C
/// vertices, triangles f3, pentagons f5, hexagons f6, and the edges e_x,
/// e_m, e_d.
struct DiagramCounts {
  long v_W = 0, v_A = 0, v_B = 0, v_C = 0;
  long f3 = 0, f5 = 0, f6 = 0;
  long e_x = 0, e_m = 0, e_d = 0;

  /// v_A + v_B + v_C - 2 v_W + f3 + f5 + f6.
  long euler() const { return v_A + v_B + v_C - 2 * v_W + f3 + f5 + f6; }

  friend bool operator==(const DiagramCounts&, const DiagramCounts&) = default;
};

inline DiagramCounts diagram_counts(int p, int P, int Q, int R, const Signature& sig) {
  if (sig.kind() == SignatureKind::elliptic)
    throw DomainError("diagram counts are not determined by corner data for elliptic signature " + sig.to_string());
  if (p < 0) throw DomainError("unrealizable corner data: p must be >= 0");
  const long S = static_cast<long>(P) + Q + R;
  const Rational a(sig.a), b(sig.b), c(sig.c);
  const Rational d = Rational(1) - 1 / a - 1 / b - 1 / c;
  const Rational vW = (P / a + Q / b + R / c - 1) / d + p + S;
  const Rational vA = (vW + P - S - p) / a;
  const Rational vB = (vW + Q - S - p) / b;
  const Rational vC = (vW + R - S - p) / c;

  auto integral = [&](const Rational& v, const char* name) {
    if (!is_integer(v) || v < 0)
      throw DomainError(std::string("unrealizable corner data: ") + name + " = " + to_string(v) + " for (p,P,Q,R)=(" +
                        std::to_string(p) + "," + std::to_string(P) + "," + std::to_string(Q) + "," +
                        std::to_string(R) + ")");
    return v.get_num().get_si();
  };

  DiagramCounts dc;
  dc.v_W = integral(vW, "v_W");
  dc.v_A = integral(vA, "v_A");
  dc.v_B = integral(vB, "v_B");
  dc.v_C = integral(vC, "v_C");
  dc.f3 = S;
  dc.f5 = 3L * p + S;
  dc.e_x = 6L * p;
  dc.e_d = S;
  dc.f6 = integral(Rational(dc.v_W - 2L * p - S), "f6");
  dc.e_m = integral(Rational(3 * dc.f6 - 3L * p), "e_m");
  if (dc.euler() != 1)
    throw DomainError("unrealizable corner data: Euler identity gives " + std::to_string(dc.euler()));
  return dc;
}

}  // namespace orbipot
