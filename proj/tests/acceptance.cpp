// Acceptance run: one [PASS]/[FAIL] line per criterion.
//
//   acceptance        all criteria
//   acceptance 4 7    only criteria 4 and 7
//
// Exit code 0 only if every selected criterion passes.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "orbipot/orbipot.hpp"

using namespace orbipot;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

Outcome golden(const Signature& sig, const std::vector<GoldenTerm>& terms) {
  const Potential W = potential_by_generation(sig, 5);
  long bad = 0;
  std::ostringstream os;
  for (const auto& g : terms) {
    const Rational got = W.coeff(g.P, g.Q, g.R, g.qpow);
    if (got == g.coeff) continue;
    if (bad < 6)
      os << "\n    expected " << term_to_text({Rational(g.coeff), g.P, g.Q, g.R, g.qpow}) << ", got "
         << to_string(got);
    ++bad;
  }
  Outcome o;
  o.ok = bad == 0;
  o.detail = std::to_string(terms.size() - bad) + "/" + std::to_string(terms.size()) + " printed terms match";
  if (bad > 6) os << "\n    ... " << bad - 6 << " more";
  o.detail += os.str();
  return o;
}

CyclicWord first_generation(const Signature& s) {
  std::string w = "a";
  for (int i = 0; i < s.b - 2; ++i) w += "ca";
  w += "c";
  for (int i = 0; i < s.a - 2; ++i) w += "bc";
  w += "b";
  for (int i = 0; i < s.c - 2; ++i) w += "ab";
  return CyclicWord(w);
}

Outcome structural() {
  Outcome o;
  for (const Signature& s : {Signature(4, 4, 4), Signature(3, 4, 5), Signature(5, 5, 5)}) {
    const auto g = generations(s, StopPolicy::max_generation(1));
    if (g[2].words != std::vector<CyclicWord>{first_generation(s)}) {
      o.ok = false;
      o.detail += "S^1 differs for " + s.to_string() + "; ";
    }
  }
  const auto g = generations(Signature(4, 4, 4), StopPolicy::max_generation(2));
  // the last printed word carries one surplus leading (bc); read without it
  const std::set<CyclicWord> want = {
      parse_word("b(ab)^2a(ca)c(bc)^2b(ab)a(ca)^2c(bc)"),
      parse_word("(bc)b a(ca)^2c(bc)^2b a b^-2 c(bc)"),
      parse_word("(bc)b(ab)^2a c(bc)^2b(ab)^2a c(bc)"),
      parse_word("b(ab)^2a(ca)^2c b(ab)^2a(ca)^2c"),
  };
  const std::set<CyclicWord> got(g[3].words.begin(), g[3].words.end());
  if (got != want) {
    o.ok = false;
    o.detail += "S^2 of (4,4,4) has " + std::to_string(got.size()) + " words, not the printed four";
  }
  if (o.ok) o.detail = "S^1 for (4,4,4), (3,4,5), (5,5,5); |S^2(4,4,4)| = 4";
  return o;
}

Outcome invariants() {
  Outcome o;
  long words = 0;
  double worst = 0;
  for (const Signature& s : {Signature(4, 4, 4), Signature(3, 4, 5), Signature(2, 4, 5), Signature(2, 3, 7)}) {
    const VerifyReport rep = verify_invariants(s, 4, 1e-6);
    words += rep.words;
    worst = std::max(worst, rep.max_residual);
    for (const auto& c : rep.checks) {
      if (c.passed()) continue;
      o.ok = false;
      o.detail += s.to_string() + " " + c.name + ": " + std::to_string(c.failed) + " failures; ";
    }
  }
  if (o.ok) {
    std::ostringstream os;
    os << words << " words, 7 checks each, max residual " << worst;
    o.detail = os.str();
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  for (EllipticCase k : {EllipticCase::c236, EllipticCase::c244}) {
    const EllipticPotential cf = elliptic_closed_form(k, 300);
    const EllipticPotential orc = elliptic_oracle(k, 300);
    for (std::size_t i = 0; i < cf.series.size(); ++i)
      if (!(cf.series[i].series == orc.series[i].series)) {
        o.ok = false;
        o.detail += std::to_string(static_cast<int>(k)) + " " + cf.series[i].name + " differs; ";
      }
  }
  if (o.ok) o.detail = "all 7 series equal through q^300";
  return o;
}

Outcome exponent_law() {
  Outcome o;
  long n = 0;
  for (EllipticCase k : {EllipticCase::c236, EllipticCase::c244}) {
    const EllipticPotential ep = elliptic_closed_form(k, 300);
    for (const auto& s : ep.series) {
      n += static_cast<long>(s.series.terms().size());
      if (!s.series.is_zero() && !satisfies_exponent_law(s.P, s.Q, s.R, signature_of(k))) {
        o.ok = false;
        o.detail += s.name + " violates the law; ";
      }
    }
    for (const auto& t : ep.fixed.terms()) {
      const bool known = (t.P == 2 && t.Q == 0 && t.R == 0 && t.qpow == 6 && t.coeff == 1) ||
                         (t.P == 1 && t.Q == 1 && t.R == 1 && t.qpow == 1 && t.coeff == -1);
      if (!known) {
        o.ok = false;
        o.detail += "unexpected fixed term " + term_to_text(t) + "; ";
      }
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " series terms checked";
  return o;
}

Outcome mirror244() {
  Outcome o;
  const MirrorReport rep = check_mirror(EllipticCase::c244, 160);
  const CubicSeries& s = rep.sigma;
  const bool lead = s.val() == -16 && s.coeff(-16) == CubicElem(Rational(-1, 4)) && s.coeff(0) == CubicElem(0) &&
                    s.coeff(16) == CubicElem(-5) && s.coeff(48) == CubicElem(Rational(31, 2)) &&
                    s.coeff(80) == CubicElem(-54);
  if (!lead) {
    o.ok = false;
    o.detail += "sigma leading terms differ; ";
  }
  if (!rep.verdict || rep.compared_through != 160) {
    o.ok = false;
    o.detail += "i(sigma) != j through q^160 (compared through q^" + std::to_string(rep.compared_through) + ")";
  }
  if (o.ok)
    o.detail = "sigma = " + series_to_text(s.truncated(80)) + "; i(sigma) = j through q^160 (inputs to q^" +
               std::to_string(rep.input_order) + ")";
  return o;
}

Outcome mirror236() {
  Outcome o;
  const MirrorReport rep = check_mirror(EllipticCase::c236, 240);
  const CubicSeries& s = rep.sigma;
  const bool lead = s.val() == 0 && s.coeff(0) == CubicElem(0, Rational(-3, 2), 0) &&
                    s.coeff(48) == CubicElem(0, -864, 0) && s.coeff(96) == CubicElem(0, -352512, 0);
  if (!lead) {
    o.ok = false;
    o.detail += "sigma coefficients differ; ";
  }
  if (!rep.verdict || !rep.i_rational || rep.compared_through != 240) {
    o.ok = false;
    o.detail += "i(sigma) != j through q^240; ";
  }
  if (o.ok)
    o.detail = "sigma = " + series_to_text(s.truncated(96)) + "; i(sigma) rational and = j through q^240";
  return o;
}

Potential from_list(const std::vector<std::tuple<long, int, int, int, long>>& list) {
  Potential W;
  for (const auto& [k, P, Q, R, q] : list) W.add({Rational(k), P, Q, R, q});
  return W;
}

Outcome spherical_forms() {
  Outcome o;
  const Potential w233 = from_list(
      {{-1, 1, 1, 1, 1}, {1, 2, 0, 0, 6}, {-1, 0, 3, 0, 9}, {-1, 0, 0, 3, 9}, {-4, 0, 1, 1, 22}, {2, 0, 0, 0, 48}});
  const Potential w234 = from_list({{-1, 1, 1, 1, 1},
                                    {1, 2, 0, 0, 6},
                                    {-1, 0, 3, 0, 9},
                                    {1, 0, 0, 4, 12},
                                    {5, 0, 1, 2, 25},
                                    {3, 0, 0, 2, 54},
                                    {3, 0, 2, 0, 38},
                                    {-2, 0, 0, 0, 96}});
  const Potential w235 = from_list({{-1, 1, 1, 1, 1},
                                    {1, 2, 0, 0, 6},
                                    {-1, 0, 3, 0, 9},
                                    {-1, 0, 0, 5, 15},
                                    {4, 0, 0, 4, 60},
                                    {-3, 0, 0, 3, 105},
                                    {5, 0, 0, 2, 150},
                                    {-6, 0, 1, 3, 28},
                                    {-9, 0, 1, 2, 73},
                                    {-7, 0, 2, 1, 41},
                                    {5, 0, 2, 0, 86},
                                    {-2, 0, 0, 0, 240}});
  if (!(spherical(Signature(2, 3, 3)) == w233)) o.detail += "(2,3,3) differs; ";
  if (!(spherical(Signature(2, 3, 4)) == w234)) o.detail += "(2,3,4) differs; ";
  if (!(spherical(Signature(2, 3, 5)) == w235)) o.detail += "(2,3,5) differs; ";

  long checked = 0;
  for (int r = 2; r <= 9; ++r) {
    const Potential W = spherical(Signature(2, 2, r));
    Potential want;
    want.add({Rational(-1), 1, 1, 1, 1});
    want.add({Rational(1), 2, 0, 0, 6});
    want.add({Rational(1), 0, 2, 0, 6});
    want.add({Rational(r % 2 == 0 ? 1 : -1), 0, 0, r, 3L * r});
    for (int k = 1; 2 * k <= r; ++k) {
      // magnitude counted by brute force over side subsets
      const long count = resolution_count_oracle(r, k);
      const long sign = (r + k) % 2 == 0 ? 1 : -1;
      want.add({Rational(sign * count), 0, 0, r - 2 * k, 3L * r + 10L * k});
      if (d_type_coefficient(r, k) != count) o.detail += "(2,2," + std::to_string(r) + ") k=" + std::to_string(k) + "; ";
      ++checked;
    }
    if (!(W == want)) o.detail += "(2,2," + std::to_string(r) + ") differs; ";
  }
  o.ok = o.detail.empty();
  if (o.ok) o.detail = "E6/E7/E8 verbatim; (2,2,r) r=2..9 with " + std::to_string(checked) + " oracle counts";
  return o;
}

Outcome convergence() {
  const Signature s(3, 4, 5);
  const auto gens = generations(s, StopPolicy::max_generation(6));
  const auto sums = generation_abs_sums(gens, s, Rational(1, 10));
  Outcome o;
  std::ostringstream os;
  for (int p = 2; p <= 6; ++p) {
    const Rational& v = sums[static_cast<std::size_t>(p + 1)];
    os << (p > 2 ? ", " : "") << "p=" << p << ": " << v.get_d();
    if (p > 2 && v > sums[static_cast<std::size_t>(p)]) o.ok = false;
  }
  o.detail = os.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "(4,4,4) printed terms, p <= 5", 60, [] { return golden(Signature(4, 4, 4), golden_444()); }},
      {2, "(3,4,5) printed terms, p <= 5", 60, [] { return golden(Signature(3, 4, 5), golden_345()); }},
      {3, "S^1 family and S^2 of (4,4,4)", 0, structural},
      {4, "invariant suite, p <= 4", 120, invariants},
      {5, "elliptic oracle equals closed forms", 60, oracle},
      {6, "elliptic exponent law", 0, exponent_law},
      {7, "mirror map (2,4,4)", 60, mirror244},
      {8, "mirror map (2,3,6)", 120, mirror236},
      {9, "spherical potentials", 10, spherical_forms},
      {10, "(3,4,5) generation sums at 0.1", 0, convergence},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && dt > c.limit) {
      o.ok = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.limit)) + " s limit)";
    }
    std::cout << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << dt
              << " s) " << o.detail << "\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
