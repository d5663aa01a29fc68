#pragma once

// Inverse mirror maps for (2,4,4) and (2,3,6) built from the elliptic
// coefficient series, and the check i(sigma(q)) = j(q^32) resp. j(q^48).

#include <string>
#include <vector>

#include "orbipot/closedforms.hpp"
#include "orbipot/qseries.hpp"

namespace orbipot {

/// 1/x + 744 + 196884 x + ... + 333202640600 x^5 with x = q^32 (244) or
/// q^48 (236); guaranteed through x^5.
inline QSeries j_reference(EllipticCase c) {
  const long step = c == EllipticCase::c244 ? 32 : 48;
  static const long coeffs[] = {1, 744, 196884, 21493760, 864299970, 20245856256L, 333202640600L};
  std::map<long, Rational> terms;
  for (long i = 0; i < 7; ++i) terms.emplace((i - 1) * step, Rational(coeffs[i]));
  return QSeries::from_terms(terms, 5 * step);
}

namespace detail {

inline QSeries q_monomial(const Rational& c, long e) { return QSeries::monomial(c, e); }
inline CubicSeries cq_monomial(const Rational& c, long e) { return CubicSeries::monomial(CubicElem(c), e); }

}  // namespace detail

/// (d_yz - 1/(4 q^4)) / d_y.
inline QSeries sigma_244_from(const QSeries& d_y, const QSeries& d_yz) {
  return (d_yz - detail::q_monomial(Rational(1, 4), -4)) * invert(d_y);
}

/// [c_yz4 - c_yz2^2/(3c_y) - (48 q^8 c_y)^-1 + c_yz2/(6 q^4 c_y)] c_y^{-1/3} Z^{-2/3},
/// Z = c_z + 2c_yz2^3/(27c_y^2) - c_yz2 c_yz4/(3c_y) - (864 q^12 c_y^2)^-1
///     + c_yz2/(72 q^8 c_y^2) - c_yz2^2/(18 q^4 c_y^2) + c_yz4/(12 q^4 c_y),
/// on the real branches: c_y^{-1/3} ~ -q^-3, Z^{-2/3} ~ 72 cbrt2 q^20.
inline CubicSeries sigma_236_from(const QSeries& c_y, const QSeries& c_z, const QSeries& c_yz2,
                                  const QSeries& c_yz4) {
  using detail::q_monomial;
  const QSeries inv_cy = invert(c_y);
  const QSeries inv_cy2 = inv_cy * inv_cy;
  const QSeries yz2_sq = c_yz2 * c_yz2;

  const QSeries first = c_yz4 - yz2_sq * inv_cy * q_monomial(Rational(1, 3), 0) -
                        inv_cy * q_monomial(Rational(1, 48), -8) + c_yz2 * inv_cy * q_monomial(Rational(1, 6), -4);

  const QSeries Z = c_z + yz2_sq * c_yz2 * inv_cy2 * q_monomial(Rational(2, 27), 0) -
                    c_yz2 * c_yz4 * inv_cy * q_monomial(Rational(1, 3), 0) -
                    inv_cy2 * q_monomial(Rational(1, 864), -12) + c_yz2 * inv_cy2 * q_monomial(Rational(1, 72), -8) -
                    yz2_sq * inv_cy2 * q_monomial(Rational(1, 18), -4) +
                    c_yz4 * inv_cy * q_monomial(Rational(1, 12), -4);

  const CubicSeries cy_root = power_rational(to_cubic(c_y), -1, 3, CubicElem(-1));
  const CubicSeries Z_pow = power_rational(to_cubic(Z), -2, 3, CubicElem(0, 72, 0));
  return to_cubic(first) * cy_root * Z_pow;
}

/// i_244(s) = 16 (s^2 + 12)^3 / (s^2 - 4)^2.
template <class F>
LaurentSeries<F> apply_i244(const LaurentSeries<F>& s) {
  using S = LaurentSeries<F>;
  const S s2 = s * s;
  const S num = s2 + S::monomial(F(12), 0);
  const S den = s2 - S::monomial(F(4), 0);
  return (num * num * num * invert(den * den)).scaled(F(16));
}

/// i_236(s) = 1728 (4 s^3) / (27 + 4 s^3).
template <class F>
LaurentSeries<F> apply_i236(const LaurentSeries<F>& s) {
  using S = LaurentSeries<F>;
  const S s3 = (s * s * s).scaled(F(4));
  return (s3 * invert(s3 + S::monomial(F(27), 0))).scaled(F(1728));
}

struct MirrorReport {
  EllipticCase kind = EllipticCase::c244;
  long input_order = 0;     // order of the elliptic coefficient series used
  CubicSeries sigma;        // rational for 244
  CubicSeries i_of_sigma;
  QSeries j_target;
  std::vector<long> matched_orders;  // exponents where j is nonzero and matched
  long compared_through = 0;
  bool i_rational = true;   // every coefficient of i(sigma) lies in Q
  bool verdict = false;
};

namespace detail {

inline MirrorReport compare_with_j(EllipticCase c, long input_order, CubicSeries sigma, CubicSeries i_sigma,
                                   long target) {
  MirrorReport rep;
  rep.kind = c;
  rep.input_order = input_order;
  rep.sigma = std::move(sigma);
  rep.i_of_sigma = std::move(i_sigma);
  rep.j_target = j_reference(c);
  const long top = std::min({*rep.i_of_sigma.ord(), *rep.j_target.ord(), target});
  rep.compared_through = top;
  rep.verdict = top >= std::min(target, *rep.j_target.ord());
  for (const auto& [e, v] : rep.i_of_sigma.terms())
    if (e <= top && !v.is_rational()) rep.i_rational = false;
  if (!rep.i_rational) rep.verdict = false;
  const long lo = std::min(rep.i_of_sigma.val(), rep.j_target.val());
  for (long e = lo; e <= top; ++e) {
    const CubicElem got = rep.i_of_sigma.coeff(e);
    const Rational want = rep.j_target.coeff(e);
    if (!(got == CubicElem(want))) {
      rep.verdict = false;
    } else if (want != 0) {
      rep.matched_orders.push_back(e);
    }
  }
  return rep;
}

}  // namespace detail

/// Mirror check from given coefficient series (the closed forms, or a
/// perturbed copy).
inline MirrorReport check_mirror_from(const EllipticPotential& ep, long target) {
  if (ep.kind == EllipticCase::c244) {
    const QSeries sigma = sigma_244_from(ep.get("d_y"), ep.get("d_yz"));
    return detail::compare_with_j(ep.kind, ep.qmax, to_cubic(sigma), to_cubic(apply_i244(sigma)), target);
  }
  const CubicSeries sigma = sigma_236_from(ep.get("c_y"), ep.get("c_z"), ep.get("c_yz2"), ep.get("c_yz4"));
  return detail::compare_with_j(ep.kind, ep.qmax, sigma, apply_i236(sigma), target);
}

/// Guaranteed order of i(sigma) computed from inputs complete through N.
inline long i_order_loss(EllipticCase c) { return c == EllipticCase::c244 ? 44 : 105; }

/// sigma through q^qord, with the input order chosen automatically.
inline CubicSeries sigma_series(EllipticCase c, long qord) {
  for (long n = qord + (c == EllipticCase::c244 ? 28 : 9);; n += 16) {
    const EllipticPotential ep = elliptic_closed_form(c, n);
    CubicSeries s = c == EllipticCase::c244
                        ? to_cubic(sigma_244_from(ep.get("d_y"), ep.get("d_yz")))
                        : sigma_236_from(ep.get("c_y"), ep.get("c_z"), ep.get("c_yz2"), ep.get("c_yz4"));
    if (*s.ord() >= qord) return s.truncated(qord);
  }
}

/// Compares i(sigma) with j through q^target (capped at the reference's
/// last printed coefficient). The input order is raised until i(sigma) is
/// guaranteed that far.
inline MirrorReport check_mirror(EllipticCase c, long target = -1) {
  const long jtop = *j_reference(c).ord();
  if (target < 0 || target > jtop) target = jtop;
  for (long n = target + i_order_loss(c);; n += 16) {
    MirrorReport rep = check_mirror_from(elliptic_closed_form(c, n), target);
    if (*rep.i_of_sigma.ord() >= target) return rep;
  }
}

}  // namespace orbipot
