#pragma once

// Numerical representation of the triangle group
//   <alpha, beta, gamma | alpha^a = beta^b = gamma^c = alpha beta gamma = 1>
// by isometries: Lorentz matrices on the hyperboloid model for hyperbolic
// signatures, affine plane motions for elliptic ones (opt-in).

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "orbipot/words.hpp"

namespace orbipot {

template <class Real>
using Mat3 = std::array<std::array<Real, 3>, 3>;

namespace detail {

template <class Real>
Mat3<Real> identity3() {
  Mat3<Real> m{};
  for (int i = 0; i < 3; ++i) m[i][i] = Real(1);
  return m;
}

template <class Real>
Mat3<Real> mul3(const Mat3<Real>& x, const Mat3<Real>& y) {
  Mat3<Real> r{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const Real v = x[i][k];
      for (int j = 0; j < 3; ++j) r[i][j] += v * y[k][j];
    }
  return r;
}

template <class Real>
Mat3<Real> pow3(const Mat3<Real>& m, int n) {
  Mat3<Real> r = identity3<Real>();
  for (int i = 0; i < n; ++i) r = mul3(r, m);
  return r;
}

template <class Real>
Real distance_from_identity(const Mat3<Real>& m) {
  Real s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Real d = m[i][j] - (i == j ? Real(1) : Real(0));
      s += d * d;
    }
  return std::sqrt(s);
}

template <class Real>
Mat3<Real> rotation(Real phi) {
  Mat3<Real> m = identity3<Real>();
  m[0][0] = std::cos(phi);
  m[0][1] = -std::sin(phi);
  m[1][0] = std::sin(phi);
  m[1][1] = std::cos(phi);
  return m;
}

/// Lorentz boost along the first axis, moving the base point (0,0,1) a
/// hyperbolic distance d.
template <class Real>
Mat3<Real> boost(Real d) {
  Mat3<Real> m = identity3<Real>();
  m[0][0] = std::cosh(d);
  m[0][2] = std::sinh(d);
  m[2][0] = std::sinh(d);
  m[2][2] = std::cosh(d);
  return m;
}

/// Affine translation of the Euclidean plane in homogeneous coordinates.
template <class Real>
Mat3<Real> translation(Real x, Real y) {
  Mat3<Real> m = identity3<Real>();
  m[0][2] = x;
  m[1][2] = y;
  return m;
}

template <class Real>
Mat3<Real> inverse_translation(Real x, Real y) {
  return translation<Real>(-x, -y);
}

}  // namespace detail

template <class Real = double>
struct TriangleRep {
  Mat3<Real> M_alpha{};
  Mat3<Real> M_beta{};
  Mat3<Real> M_gamma{};
  Signature sig;
  Real tol = Real(1e-6);

  const Mat3<Real>& generator(char ch) const {
    switch (ch) {
      case 'a': return M_alpha;
      case 'b': return M_beta;
      default: return M_gamma;
    }
  }

  /// Frobenius residuals of alpha^a, beta^b, gamma^c and alpha beta gamma.
  std::array<Real, 4> residuals() const {
    using namespace detail;
    return {distance_from_identity(pow3(M_alpha, sig.a)), distance_from_identity(pow3(M_beta, sig.b)),
            distance_from_identity(pow3(M_gamma, sig.c)),
            distance_from_identity(mul3(mul3(M_alpha, M_beta), M_gamma))};
  }
};

/// Rotations by 2 pi / order about the vertices of the triangle with angles
/// pi/a, pi/b, pi/c. Vertex C sits at the origin, A on the positive first
/// axis, B at angle pi/c. Both rotation senses are tried.
template <class Real = double>
TriangleRep<Real> build_rep(const Signature& sig, Real tol = Real(1e-6), bool experimental_elliptic = false) {
  using namespace detail;
  const SignatureKind kind = sig.kind();
  if (kind == SignatureKind::spherical || (kind == SignatureKind::elliptic && !experimental_elliptic))
    throw DomainError("representation requires hyperbolic signature, got " + std::string(to_string(kind)) + " " +
                      sig.to_string());

  const Real pi = std::numbers::pi_v<Real>;
  const Real A = pi / sig.a, B = pi / sig.b, C = pi / sig.c;

  // conj_a / conj_b map the origin to vertices A / B.
  Mat3<Real> conj_a, conj_a_inv, conj_b, conj_b_inv;
  if (kind == SignatureKind::hyperbolic) {
    const Real len_a = std::acosh((std::cos(A) + std::cos(B) * std::cos(C)) / (std::sin(B) * std::sin(C)));
    const Real len_b = std::acosh((std::cos(B) + std::cos(A) * std::cos(C)) / (std::sin(A) * std::sin(C)));
    conj_a = boost(len_b);
    conj_a_inv = boost(-len_b);
    conj_b = mul3(mul3(rotation(C), boost(len_a)), rotation(-C));
    conj_b_inv = mul3(mul3(rotation(C), boost(-len_a)), rotation(-C));
  } else {
    // Euclidean triangle with unit side AB; law of sines for the others.
    const Real len_a = std::sin(A) / std::sin(C);
    const Real len_b = std::sin(B) / std::sin(C);
    conj_a = translation(len_b, Real(0));
    conj_a_inv = inverse_translation(len_b, Real(0));
    conj_b = translation(len_a * std::cos(C), len_a * std::sin(C));
    conj_b_inv = inverse_translation(len_a * std::cos(C), len_a * std::sin(C));
  }

  for (int sense : {1, -1}) {
    TriangleRep<Real> rep;
    rep.sig = sig;
    rep.tol = tol;
    rep.M_alpha = mul3(mul3(conj_a, rotation(sense * 2 * A)), conj_a_inv);
    rep.M_beta = mul3(mul3(conj_b, rotation(sense * 2 * B)), conj_b_inv);
    rep.M_gamma = rotation(sense * 2 * C);
    bool ok = true;
    for (Real r : rep.residuals()) ok = ok && r < tol;
    if (ok) return rep;
  }
  throw DomainError("representation failed for " + sig.to_string());
}

/// Ordered product of the generator matrices along the letters.
template <class Real>
Mat3<Real> evaluate(std::string_view letters, const TriangleRep<Real>& rep) {
  Mat3<Real> m = detail::identity3<Real>();
  for (char ch : letters) m = detail::mul3(m, rep.generator(ch));
  return m;
}

template <class Real>
Real triviality_residual(const CyclicWord& w, const TriangleRep<Real>& rep) {
  return detail::distance_from_identity(evaluate(w.letters(), rep));
}

template <class Real>
bool is_trivial(const CyclicWord& w, const TriangleRep<Real>& rep) {
  return triviality_residual(w, rep) < rep.tol;
}

}  // namespace orbipot
