#include <random>

#include <catch_amalgamated.hpp>

#include "orbipot/closedforms.hpp"
#include "orbipot/qseries.hpp"

using namespace orbipot;

namespace {

QSeries series(std::map<long, Rational> terms, std::optional<long> ord) { return QSeries::from_terms(terms, ord); }

QSeries random_series(std::mt19937& rng, long val, long ord) {
  std::map<long, Rational> t;
  t[val] = make_rational(static_cast<long>(rng() % 9) + 1, static_cast<long>(rng() % 4) + 1);
  for (long e = val + 1; e <= ord; ++e)
    if (rng() % 2) t[e] = make_rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 5) + 1);
  return QSeries::from_terms(t, ord);
}

}  // namespace

TEST_CASE("cubic field arithmetic", "[qseries]") {
  const CubicElem t = CubicElem::cbrt2();
  CHECK(t * t * t == CubicElem(2));
  const CubicElem x(Rational(1, 3), Rational(-2), Rational(5, 7));
  CHECK(x * x.inverse() == CubicElem(1));
  CHECK((x / x) == CubicElem(1));
  CHECK(CubicElem(0, 72, 0) * CubicElem(0, 72, 0) * CubicElem(0, 72, 0) == CubicElem(Rational(72 * 72 * 72 * 2)));
  CHECK(CubicElem(5).is_rational());
  CHECK_FALSE(t.is_rational());
  CHECK_THROWS_AS(CubicElem(0).inverse(), DomainError);
}

TEST_CASE("ring operations and truncation orders", "[qseries]") {
  // (q^-1 + 1)(q - q^2) = 1 - q^2
  const QSeries f = series({{-1, 1}, {0, 1}}, 5);
  const QSeries g = series({{1, 1}, {2, -1}}, 8);
  const QSeries h = f * g;
  CHECK(*h.ord() == std::min(-1 + 8, 1 + 5));
  CHECK(h.coeff(0) == 1);
  CHECK(h.coeff(1) == 0);
  CHECK(h.coeff(2) == -1);
  CHECK(h.val() == 0);

  const QSeries z = f + (-f);
  CHECK(z.is_zero());
  CHECK(*z.ord() == 5);

  CHECK_THROWS_AS(f.coeff(6), DomainError);
  CHECK(*(f + g).ord() == 5);
}

TEST_CASE("exact series", "[qseries]") {
  const QSeries m = QSeries::monomial(Rational(4), 4);
  CHECK(m.exact());
  CHECK(invert(m) == QSeries::monomial(Rational(1, 4), -4));
  const QSeries e = QSeries::from_terms({{0, Rational(1)}, {1, Rational(-1)}});
  CHECK_THROWS_AS(invert(e), DomainError);
  CHECK((m * e).exact());
  // exact * truncated keeps the truncated order shifted by the exact valuation
  CHECK(*(m * e.truncated(10)).ord() == 14);
}

TEST_CASE("inversion", "[qseries]") {
  const QSeries one_minus_q = series({{0, 1}, {1, -1}}, 20);
  const QSeries geo = invert(one_minus_q);
  for (long e = 0; e <= 20; ++e) CHECK(geo.coeff(e) == 1);
  CHECK(*geo.ord() == 20);
  CHECK_THROWS_WITH(invert(QSeries::from_terms({}, 5)), Catch::Matchers::ContainsSubstring("division by zero series"));

  const QSeries cy = elliptic_236(200).get("c_y");
  const QSeries inv = invert(cy);
  CHECK(inv.val() == -9);
  CHECK(inv.leading() == -1);
}

TEST_CASE("ring axioms on random samples", "[qseries]") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const QSeries a = random_series(rng, static_cast<long>(rng() % 7) - 3, 12);
    const QSeries b = random_series(rng, static_cast<long>(rng() % 7) - 3, 10);
    const QSeries c = random_series(rng, static_cast<long>(rng() % 7) - 3, 9);
    CHECK(agree(a * b, b * a));
    CHECK(agree((a * b) * c, a * (b * c)));
    CHECK(agree(a * (b + c), a * b + a * c));
    CHECK(agree(a * invert(a), QSeries::monomial(Rational(1), 0)));
    CHECK(agree(invert(invert(a)), a));
    CHECK(agree(to_cubic(a * b), to_cubic(a) * to_cubic(b)));
    CHECK(agree(to_cubic(invert(a)), invert(to_cubic(a))));
  }
}

TEST_CASE("rational powers", "[qseries]") {
  const QSeries m9 = QSeries::monomial(Rational(-1), 9);
  CHECK(power_rational(m9, 1, 3, Rational(-1)) == QSeries::monomial(Rational(-1), 3));
  CHECK_THROWS_WITH(power_rational(m9, 1, 3, Rational(1)), Catch::Matchers::ContainsSubstring("invalid branch data"));
  CHECK_THROWS_WITH(power_rational(QSeries::monomial(Rational(1), 4), 1, 3, Rational(1)),
                    Catch::Matchers::ContainsSubstring("invalid branch data"));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    QSeries f = random_series(rng, 0, 15);
    f = f * invert(QSeries::monomial(f.leading(), 0));  // leading coefficient 1
    CHECK(agree(power_rational(f, 2, 1, Rational(1)), f * f));
    for (long k : {2L, 3L, 6L}) {
      const QSeries root = power_rational(f, 1, k, Rational(1));
      QSeries back = QSeries::monomial(Rational(1), 0);
      for (long i = 0; i < k; ++i) back = back * root;
      CHECK(agree(back, f));
    }
  }

  // (-1/864 q^-30 + ...)^(-2/3) leads with 72 cbrt2 q^20
  const CubicSeries z = to_cubic(series({{-30, Rational(-1, 864)}, {-29, Rational(3)}}, 0));
  const CubicSeries p = power_rational(z, -2, 3, CubicElem(0, 72, 0));
  CHECK(p.val() == 20);
  CHECK(p.leading() == CubicElem(0, 72, 0));
  const CubicSeries cube = p * p * p;
  CHECK(agree(cube, invert(z * z)));
}
