#pragma once

// Truncated Laurent series in q over Q and over the cubic field Q(t), t^3 = 2.
//
// A series stores its coefficients densely from the valuation upward and a
// guaranteed order `ord` (inclusive): every coefficient at an exponent <= ord
// is exact, nothing is known beyond. ord = nullopt means the series is exact
// (a Laurent polynomial).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbipot/error.hpp"
#include "orbipot/rational.hpp"

namespace orbipot {

/// r + s t + u t^2 with t^3 = 2.
struct CubicElem {
  Rational r, s, u;

  CubicElem() = default;
  CubicElem(Rational r_) : r(std::move(r_)) {}  // NOLINT: implicit embedding of Q
  CubicElem(long v) : r(v) {}                   // NOLINT
  CubicElem(Rational r_, Rational s_, Rational u_) : r(std::move(r_)), s(std::move(s_)), u(std::move(u_)) {}

  static CubicElem cbrt2() { return {Rational(0), Rational(1), Rational(0)}; }

  bool is_zero() const { return r == 0 && s == 0 && u == 0; }
  bool is_rational() const { return s == 0 && u == 0; }

  /// Field norm r^3 + 2 s^3 + 4 u^3 - 6 r s u.
  Rational norm() const { return r * r * r + 2 * s * s * s + 4 * u * u * u - 6 * r * s * u; }

  CubicElem inverse() const {
    const Rational n = norm();
    if (n == 0) throw DomainError("division by zero in Q(cbrt2)");
    return {(r * r - 2 * s * u) / n, (2 * u * u - r * s) / n, (s * s - r * u) / n};
  }

  CubicElem& operator+=(const CubicElem& o) {
    r += o.r;
    s += o.s;
    u += o.u;
    return *this;
  }
  CubicElem& operator-=(const CubicElem& o) {
    r -= o.r;
    s -= o.s;
    u -= o.u;
    return *this;
  }
  CubicElem& operator*=(const CubicElem& o) { return *this = *this * o; }
  CubicElem& operator/=(const CubicElem& o) { return *this = *this * o.inverse(); }

  friend CubicElem operator+(CubicElem a, const CubicElem& b) { return a += b; }
  friend CubicElem operator-(CubicElem a, const CubicElem& b) { return a -= b; }
  friend CubicElem operator-(const CubicElem& a) { return {-a.r, -a.s, -a.u}; }
  friend CubicElem operator*(const CubicElem& a, const CubicElem& b) {
    // t^3 = 2, t^4 = 2t
    return {a.r * b.r + 2 * (a.s * b.u + a.u * b.s), a.r * b.s + a.s * b.r + 2 * a.u * b.u,
            a.r * b.u + a.s * b.s + a.u * b.r};
  }
  friend CubicElem operator/(const CubicElem& a, const CubicElem& b) { return a * b.inverse(); }
  friend bool operator==(const CubicElem& a, const CubicElem& b) {
    return a.r == b.r && a.s == b.s && a.u == b.u;
  }
};

namespace detail {

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw DomainError("division by zero");
    return 1 / x;
  }
  static Rational from_rational(const Rational& x) { return x; }
};

template <>
struct FieldOps<CubicElem> {
  static bool is_zero(const CubicElem& x) { return x.is_zero(); }
  static CubicElem inverse(const CubicElem& x) { return x.inverse(); }
  static CubicElem from_rational(const Rational& x) { return CubicElem(x); }
};

inline std::optional<long> min_ord(std::optional<long> a, std::optional<long> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace detail

template <class F>
class LaurentSeries {
 public:
  using Field = F;
  using Ops = detail::FieldOps<F>;

  LaurentSeries() = default;

  /// Exact monomial c q^e.
  static LaurentSeries monomial(const F& c, long e) {
    LaurentSeries s;
    s.val_ = e;
    s.coeffs_ = {c};
    s.normalize();
    return s;
  }

  /// Exact series from (exponent, coefficient) pairs, optionally truncated.
  static LaurentSeries from_terms(const std::map<long, F>& terms, std::optional<long> ord = std::nullopt) {
    LaurentSeries s;
    s.ord_ = ord;
    if (!terms.empty()) {
      const long lo = terms.begin()->first;
      long hi = terms.rbegin()->first;
      if (ord) hi = std::min(hi, *ord);
      s.val_ = lo;
      if (hi >= lo) {
        s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), F{});
        for (const auto& [e, c] : terms)
          if (e <= hi) s.coeffs_[static_cast<std::size_t>(e - lo)] = c;
      }
    }
    s.normalize();
    return s;
  }

  /// Guaranteed order; nullopt for exact series.
  std::optional<long> ord() const { return ord_; }
  bool exact() const { return !ord_.has_value(); }

  /// True when no nonzero coefficient is known.
  bool is_zero() const { return coeffs_.empty(); }

  /// Lowest exponent with a nonzero coefficient. For a truncated zero series
  /// this is ord + 1 (the series is O(q^{ord+1})).
  long val() const {
    if (coeffs_.empty()) return ord_ ? *ord_ + 1 : 0;
    return val_;
  }

  const F& leading() const {
    if (coeffs_.empty()) throw DomainError("division by zero series");
    return coeffs_.front();
  }

  /// Coefficient of q^e; asking beyond the guaranteed order is an error.
  F coeff(long e) const {
    if (ord_ && e > *ord_)
      throw DomainError("coefficient of q^" + std::to_string(e) + " requested beyond guaranteed order " +
                        std::to_string(*ord_));
    if (coeffs_.empty() || e < val_ || e >= val_ + static_cast<long>(coeffs_.size())) return F{};
    return coeffs_[static_cast<std::size_t>(e - val_)];
  }

  /// Nonzero terms in increasing exponent order.
  std::map<long, F> terms() const {
    std::map<long, F> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!Ops::is_zero(coeffs_[i])) out.emplace(val_ + static_cast<long>(i), coeffs_[i]);
    return out;
  }

  /// Lowers the guaranteed order to n (no-op if already lower).
  LaurentSeries truncated(long n) const {
    LaurentSeries s = *this;
    s.ord_ = detail::min_ord(ord_, n);
    s.normalize();
    return s;
  }

  /// Multiplication by q^k.
  LaurentSeries shifted(long k) const {
    LaurentSeries s = *this;
    s.val_ += k;
    if (s.ord_) *s.ord_ += k;
    return s;
  }

  LaurentSeries scaled(const F& c) const {
    LaurentSeries s = *this;
    for (auto& x : s.coeffs_) x = x * c;
    s.normalize();
    return s;
  }

  friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return combine(f, g, false); }
  friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return combine(f, g, true); }
  friend LaurentSeries operator-(const LaurentSeries& f) { return f.scaled(F(-1)); }

  friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    LaurentSeries out;
    if ((f.exact() && f.is_zero()) || (g.exact() && g.is_zero())) return out;
    // known through min(f.val + g.ord, g.val + f.ord)
    std::optional<long> ord;
    if (f.ord_) ord = *f.ord_ + g.val();
    if (g.ord_) ord = detail::min_ord(ord, *g.ord_ + f.val());
    out.ord_ = ord;
    if (f.coeffs_.empty() || g.coeffs_.empty()) {
      out.normalize();
      return out;
    }
    out.val_ = f.val_ + g.val_;
    long hi = out.val_ + static_cast<long>(f.coeffs_.size() + g.coeffs_.size()) - 2;
    if (ord) hi = std::min(hi, *ord);
    if (hi < out.val_) {
      out.normalize();
      return out;
    }
    const std::size_t n = static_cast<std::size_t>(hi - out.val_ + 1);
    out.coeffs_.assign(n, F{});
    for (std::size_t i = 0; i < f.coeffs_.size() && i < n; ++i) {
      if (Ops::is_zero(f.coeffs_[i])) continue;
      const std::size_t jmax = std::min(g.coeffs_.size(), n - i);
      for (std::size_t j = 0; j < jmax; ++j) out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    out.normalize();
    return out;
  }

  LaurentSeries& operator+=(const LaurentSeries& g) { return *this = *this + g; }
  LaurentSeries& operator-=(const LaurentSeries& g) { return *this = *this - g; }
  LaurentSeries& operator*=(const LaurentSeries& g) { return *this = *this * g; }

  /// Multiplicative inverse. Inverting an exact series that is not a
  /// monomial needs an explicit truncation first.
  friend LaurentSeries invert(const LaurentSeries& f) {
    if (f.coeffs_.empty()) throw DomainError("division by zero series");
    const long v = f.val_;
    const F inv0 = Ops::inverse(f.coeffs_.front());
    if (!f.ord_) {
      if (f.coeffs_.size() == 1) return monomial(inv0, -v);
      throw DomainError("inverting an exact non-monomial series needs a truncation order");
    }
    const long rel = *f.ord_ - v;  // relative precision
    LaurentSeries out;
    out.val_ = -v;
    out.ord_ = -v + rel;
    const std::size_t n = static_cast<std::size_t>(rel + 1);
    out.coeffs_.assign(n, F{});
    out.coeffs_[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
      F acc{};
      const std::size_t jmax = std::min(k, f.coeffs_.size() - 1);
      for (std::size_t j = 1; j <= jmax; ++j)
        if (!Ops::is_zero(f.coeffs_[j])) acc += f.coeffs_[j] * out.coeffs_[k - j];
      out.coeffs_[k] = -(acc * inv0);
    }
    out.normalize();
    return out;
  }

  friend LaurentSeries operator/(const LaurentSeries& f, const LaurentSeries& g) { return f * invert(g); }

  /// The series g with g^den = f^num and leading coefficient leading_root.
  /// Requires den | num * val(f) and leading_root^den == lead(f)^num.
  friend LaurentSeries power_rational(const LaurentSeries& f, long num, long den, const F& leading_root) {
    if (den <= 0) throw DomainError("invalid branch data: denominator must be positive");
    if (f.coeffs_.empty()) throw DomainError("division by zero series");
    const long v = f.val_;
    if ((num * v) % den != 0)
      throw DomainError("invalid branch data: " + std::to_string(den) + " does not divide " + std::to_string(num) +
                        "*" + std::to_string(v));
    if (ipow(leading_root, den) != ipow_signed(f.coeffs_.front(), num))
      throw DomainError("invalid branch data: supplied root does not match the leading coefficient");

    if (!f.ord_) {
      if (f.coeffs_.size() == 1) return monomial(leading_root, num * v / den);
      if (den == 1 && num >= 0) {
        LaurentSeries out = monomial(F(1), 0);
        for (long i = 0; i < num; ++i) out = out * f;
        return out;
      }
      throw DomainError("fractional power of an exact non-monomial series needs a truncation order");
    }

    // Unit part U = f / (lead q^v) = 1 + h; G = U^alpha by the J.C.P. Miller
    // recurrence n G_n = sum_{k=1}^n ((alpha+1) k - n) U_k G_{n-k}.
    const long rel = *f.ord_ - v;
    const std::size_t n = static_cast<std::size_t>(rel + 1);
    const F inv0 = Ops::inverse(f.coeffs_.front());
    std::vector<F> U(n, F{});
    for (std::size_t k = 0; k < n && k < f.coeffs_.size(); ++k) U[k] = f.coeffs_[k] * inv0;
    const Rational alpha(num, den);
    std::vector<F> G(n, F{});
    G[0] = F(1);
    for (std::size_t m = 1; m < n; ++m) {
      F acc{};
      for (std::size_t k = 1; k <= m; ++k) {
        if (Ops::is_zero(U[k])) continue;
        const Rational w = (alpha + 1) * static_cast<long>(k) - static_cast<long>(m);
        if (w == 0) continue;
        acc += Ops::from_rational(w) * U[k] * G[m - k];
      }
      G[m] = acc * Ops::from_rational(Rational(1, static_cast<long>(m)));
    }
    LaurentSeries out;
    out.val_ = num * v / den;
    out.ord_ = out.val_ + rel;
    out.coeffs_ = std::move(G);
    for (auto& c : out.coeffs_) c = c * leading_root;
    out.normalize();
    return out;
  }

  /// Coefficients equal wherever both series guarantee them.
  friend bool agree(const LaurentSeries& f, const LaurentSeries& g) {
    const std::optional<long> ord = detail::min_ord(f.ord_, g.ord_);
    long lo = std::min(f.val(), g.val());
    long hi = ord ? *ord : std::max(f.top(), g.top());
    for (long e = lo; e <= hi; ++e)
      if (!(f.coeff(e) == g.coeff(e))) return false;
    return true;
  }

  friend bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
    return f.ord_ == g.ord_ && f.terms() == g.terms();
  }

 private:
  static F ipow(const F& x, long n) {
    F r(1);
    for (long i = 0; i < n; ++i) r = r * x;
    return r;
  }
  static F ipow_signed(const F& x, long n) { return n >= 0 ? ipow(x, n) : ipow(Ops::inverse(x), -n); }

  long top() const { return coeffs_.empty() ? val() : val_ + static_cast<long>(coeffs_.size()) - 1; }

  static LaurentSeries combine(const LaurentSeries& f, const LaurentSeries& g, bool subtract) {
    LaurentSeries out;
    out.ord_ = detail::min_ord(f.ord_, g.ord_);
    if (f.coeffs_.empty() && g.coeffs_.empty()) return out;
    long lo = std::min(f.coeffs_.empty() ? g.val_ : f.val_, g.coeffs_.empty() ? f.val_ : g.val_);
    long hi = std::max(f.top(), g.top());
    if (out.ord_) hi = std::min(hi, *out.ord_);
    if (hi < lo) return out;
    out.val_ = lo;
    out.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), F{});
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      const long e = f.val_ + static_cast<long>(i);
      if (e > hi) break;
      out.coeffs_[static_cast<std::size_t>(e - lo)] += f.coeffs_[i];
    }
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
      const long e = g.val_ + static_cast<long>(i);
      if (e > hi) break;
      if (subtract)
        out.coeffs_[static_cast<std::size_t>(e - lo)] -= g.coeffs_[i];
      else
        out.coeffs_[static_cast<std::size_t>(e - lo)] += g.coeffs_[i];
    }
    out.normalize();
    return out;
  }

  void normalize() {
    if (ord_) {
      const long keep = *ord_ - val_ + 1;
      if (keep <= 0)
        coeffs_.clear();
      else if (static_cast<long>(coeffs_.size()) > keep)
        coeffs_.resize(static_cast<std::size_t>(keep));
    }
    std::size_t lead = 0;
    while (lead < coeffs_.size() && Ops::is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      val_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      val_ += static_cast<long>(lead);
    }
    while (!coeffs_.empty() && Ops::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  long val_ = 0;
  std::vector<F> coeffs_;
  std::optional<long> ord_;
};

using QSeries = LaurentSeries<Rational>;
using CubicSeries = LaurentSeries<CubicElem>;

/// Embedding Q[[q]] -> Q(cbrt2)[[q]].
inline CubicSeries to_cubic(const QSeries& f) {
  std::map<long, CubicElem> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace(e, CubicElem(c));
  return CubicSeries::from_terms(terms, f.ord());
}

}  // namespace orbipot
