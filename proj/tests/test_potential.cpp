#include <catch_amalgamated.hpp>

#include "golden.hpp"
#include "orbipot/potential.hpp"

using namespace orbipot;

TEST_CASE("area", "[potential]") {
  CHECK(area(1, 1, 1, Signature(4, 4, 4)) == 1);
  CHECK(area(1, 1, 1, Signature(2, 3, 7)) == 1);
  CHECK(area(2, 2, 2, Signature(4, 4, 4)) == 34);
  CHECK(area(5, 0, 0, Signature(5, 6, 7)) == 15);
  CHECK(area(0, 4, 0, Signature(3, 4, 5)) == 12);
  CHECK_THROWS_WITH(area(1, 1, 1, Signature(2, 4, 4)), Catch::Matchers::ContainsSubstring("elliptic"));
}

TEST_CASE("terms of words", "[potential]") {
  const Signature s(4, 4, 4);
  CHECK(term_of_word(CyclicWord("abc"), s) == PotentialTerm{Rational(-1), 1, 1, 1, 1});
  CHECK(term_of_word(CyclicWord("bcbcbcbc"), s) == PotentialTerm{Rational(1), 4, 0, 0, 12});
  CHECK(term_of_word(parse_word("(bc)b(ab)^2a(ca)^2c(bc)"), s) == PotentialTerm{Rational(-8), 2, 2, 2, 34});
  // 22-letter S^2 word with eta = 2: (2*2 + 8) / 2
  CHECK(term_of_word(CyclicWord("ababacacacbababacacacb"), s) == PotentialTerm{Rational(6), 0, 4, 4, 56});
}

TEST_CASE("assembled potentials, low generations", "[potential]") {
  const Potential W444 = potential_by_generation(Signature(4, 4, 4), 1);
  Potential want;
  want.add({Rational(-1), 1, 1, 1, 1});
  want.add({Rational(1), 4, 0, 0, 12});
  want.add({Rational(1), 0, 4, 0, 12});
  want.add({Rational(1), 0, 0, 4, 12});
  want.add({Rational(-8), 2, 2, 2, 34});
  CHECK(W444 == want);

  const Potential W345 = potential_by_generation(Signature(3, 4, 5), 0);
  Potential want345;
  want345.add({Rational(-1), 1, 1, 1, 1});
  want345.add({Rational(1), 3, 0, 0, 9});
  want345.add({Rational(1), 0, 4, 0, 12});
  want345.add({Rational(-1), 0, 0, 5, 15});
  CHECK(W345 == want345);

  CHECK(potential_by_generation(Signature(4, 4, 4), 2).coeff(3, 3, 3, 67) == 13);
}

TEST_CASE("terms are sorted by q-power then exponents", "[potential]") {
  const auto terms = potential_by_generation(Signature(3, 4, 5), 4).terms();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto& a = terms[i - 1];
    const auto& b = terms[i];
    CHECK(std::tie(a.qpow, a.P, a.Q, a.R) < std::tie(b.qpow, b.P, b.Q, b.R));
  }
}

TEST_CASE("zero coefficients are dropped", "[potential]") {
  Potential W;
  W.add({Rational(3), 1, 2, 3, 40});
  W.add({Rational(-3), 1, 2, 3, 40});
  CHECK(W.empty());
}

TEST_CASE("low-generation golden terms", "[potential]") {
  // p <= 2 agree term by term with the published lists
  const Potential W444 = potential_by_generation(Signature(4, 4, 4), 5);
  const Potential W345 = potential_by_generation(Signature(3, 4, 5), 5);
  for (const auto& g : golden_444())
    if (g.qpow <= 67) CHECK(W444.coeff(g.P, g.Q, g.R, g.qpow) == g.coeff);
  for (const auto& g : golden_345())
    if (g.qpow <= 67) CHECK(W345.coeff(g.P, g.Q, g.R, g.qpow) == g.coeff);
}

TEST_CASE("published monomials are exactly the generated ones", "[potential]") {
  auto keys = [](const Potential& W) {
    std::set<std::tuple<int, int, int, long>> out;
    for (const auto& t : W.terms()) out.insert({t.P, t.Q, t.R, t.qpow});
    return out;
  };
  auto golden_keys = [](const std::vector<GoldenTerm>& g) {
    std::set<std::tuple<int, int, int, long>> out;
    for (const auto& t : g) out.insert({t.P, t.Q, t.R, t.qpow});
    return out;
  };
  CHECK(keys(potential_by_generation(Signature(4, 4, 4), 5)) == golden_keys(golden_444()));
  CHECK(keys(potential_by_generation(Signature(3, 4, 5), 5)) == golden_keys(golden_345()));
}

TEST_CASE("(4,4,4) areas follow 11S - 32", "[potential]") {
  const Signature s(4, 4, 4);
  for (const auto& g : generations(s, StopPolicy::max_generation(5))) {
    if (g.p < 0) continue;
    for (const auto& w : g.words) {
      const PotentialTerm t = term_of_word(w, s);
      CHECK(t.qpow == 11L * (t.P + t.Q + t.R) - 32);
    }
  }
}

TEST_CASE("area-complete mode", "[potential]") {
  const Signature s(3, 4, 5);
  const Potential by_area = potential_by_qpower(s, 100);
  for (const auto& t : by_area.terms()) CHECK(t.qpow <= 100);
  // every term of low generations with q-power <= 100 is included
  for (const auto& t : potential_by_generation(s, 4).terms())
    if (t.qpow <= 100) CHECK(by_area.coeff(t.P, t.Q, t.R, t.qpow) == t.coeff);
}

TEST_CASE("children have larger area", "[potential]") {
  const Signature s(2, 3, 7);
  for (const auto& g : generations(s, StopPolicy::max_generation(5)))
    for (const auto& w : g.words)
      for (const auto& child : children(w, s)) CHECK(term_of_word(child, s).qpow > term_of_word(w, s).qpow);
}

TEST_CASE("diagram counts", "[potential]") {
  const DiagramCounts dc = diagram_counts(1, 2, 2, 2, Signature(4, 4, 4));
  CHECK(dc.v_W == 9);
  CHECK(dc.f3 == 6);
  CHECK(dc.f5 == 9);
  CHECK(dc.e_x == 6);
  CHECK(dc.e_d == 6);
  CHECK(dc.f6 == 1);
  CHECK(dc.e_m == 0);
  CHECK(dc.v_A == 1);
  CHECK(dc.v_B == 1);
  CHECK(dc.v_C == 1);
  CHECK(dc.euler() == 1);

  const DiagramCounts x5 = diagram_counts(0, 5, 0, 0, Signature(5, 6, 7));
  CHECK(x5.f3 == 5);
  CHECK(x5.f5 == 5);
  CHECK(x5.euler() == 1);

  CHECK_THROWS_WITH(diagram_counts(1, 1, 0, 0, Signature(4, 4, 4)),
                    Catch::Matchers::ContainsSubstring("unrealizable corner data"));
  CHECK_THROWS_AS(diagram_counts(1, 2, 2, 2, Signature(2, 4, 4)), DomainError);
}

TEST_CASE("generation sums decrease for (3,4,5)", "[potential]") {
  const Signature s(3, 4, 5);
  const auto sums = generation_abs_sums(generations(s, StopPolicy::max_generation(6)), s, Rational(1, 10));
  for (int p = 3; p <= 6; ++p) CHECK(sums[p + 1] <= sums[p]);
}
