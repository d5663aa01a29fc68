#pragma once

// Text and JSON forms of potentials, series and mirror reports.
//
// Term text:   -8*x^2*y^2*z^2*q^34   (sign always printed, q^n always present)
// Term JSON:   {"x":2,"y":2,"z":2,"q":34,"coeff":"-8"}
// Series JSON: {"field":"Q"|"Q(cbrt2)","terms":[{"q":e,"coeff":...}],"ord":n}

#include <sstream>
#include <string>

#include <json.hpp>

#include "orbipot/closedforms.hpp"
#include "orbipot/mirrormap.hpp"
#include "orbipot/potential.hpp"
#include "orbipot/qseries.hpp"

namespace orbipot {

using json = nlohmann::ordered_json;

inline std::string signed_string(const Rational& c) {
  const std::string s = to_string(c);
  return c < 0 ? s : "+" + s;
}

inline std::string term_to_text(const PotentialTerm& t) {
  std::string out = signed_string(t.coeff);
  auto var = [&](const char* name, int e) {
    if (e == 0) return;
    out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  var("x", t.P);
  var("y", t.Q);
  var("z", t.R);
  out += "*q^" + std::to_string(t.qpow);
  return out;
}

inline std::string potential_to_text(const Potential& W) {
  std::string out;
  for (const auto& t : W.terms()) out += term_to_text(t) + "\n";
  return out;
}

inline json term_to_json(const PotentialTerm& t) {
  return json{{"x", t.P}, {"y", t.Q}, {"z", t.R}, {"q", t.qpow}, {"coeff", to_string(t.coeff)}};
}

inline PotentialTerm term_from_json(const json& j) {
  PotentialTerm t;
  t.P = j.at("x").get<int>();
  t.Q = j.at("y").get<int>();
  t.R = j.at("z").get<int>();
  t.qpow = j.at("q").get<long>();
  t.coeff = parse_rational(j.at("coeff").get<std::string>());
  return t;
}

inline json potential_to_json(const Potential& W) {
  json terms = json::array();
  for (const auto& t : W.terms()) terms.push_back(term_to_json(t));
  return terms;
}

inline Potential potential_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("terms") : j;
  Potential W;
  for (const auto& t : arr) W.add(term_from_json(t));
  return W;
}

// ---------------------------------------------------------------------------

inline json coeff_to_json(const Rational& c) { return to_string(c); }
inline json coeff_to_json(const CubicElem& c) {
  return json{{"r", to_string(c.r)}, {"t", to_string(c.s)}, {"t2", to_string(c.u)}};
}

inline const char* field_name(const Rational*) { return "Q"; }
inline const char* field_name(const CubicElem*) { return "Q(cbrt2)"; }

template <class F>
json series_to_json(const LaurentSeries<F>& s) {
  json terms = json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(json{{"q", e}, {"coeff", coeff_to_json(c)}});
  json out{{"field", field_name(static_cast<const F*>(nullptr))}, {"terms", terms}};
  out["ord"] = s.ord() ? json(*s.ord()) : json(nullptr);
  return out;
}

inline QSeries qseries_from_json(const json& j) {
  if (j.at("field").get<std::string>() != "Q") throw DomainError("expected a series over Q");
  std::map<long, Rational> terms;
  for (const auto& t : j.at("terms")) terms[t.at("q").get<long>()] = parse_rational(t.at("coeff").get<std::string>());
  std::optional<long> ord;
  if (!j.at("ord").is_null()) ord = j.at("ord").get<long>();
  return QSeries::from_terms(terms, ord);
}

inline CubicSeries cubic_series_from_json(const json& j) {
  const std::string field = j.at("field").get<std::string>();
  if (field == "Q") return to_cubic(qseries_from_json(j));
  if (field != "Q(cbrt2)") throw DomainError("unknown field " + field);
  std::map<long, CubicElem> terms;
  for (const auto& t : j.at("terms")) {
    const json& c = t.at("coeff");
    terms[t.at("q").get<long>()] = CubicElem(parse_rational(c.at("r").get<std::string>()),
                                             parse_rational(c.at("t").get<std::string>()),
                                             parse_rational(c.at("t2").get<std::string>()));
  }
  std::optional<long> ord;
  if (!j.at("ord").is_null()) ord = j.at("ord").get<long>();
  return CubicSeries::from_terms(terms, ord);
}

inline std::string coeff_to_text(const Rational& c) { return signed_string(c); }
inline std::string coeff_to_text(const CubicElem& c) {
  if (c.is_rational()) return signed_string(c.r);
  std::string out = "+(";
  bool first = true;
  auto part = [&](const Rational& v, const char* unit) {
    if (v == 0) return;
    std::string s = to_string(v);
    if (!first) s = v < 0 ? s : "+" + s;
    out += s + unit;
    first = false;
  };
  part(c.r, "");
  part(c.s, "*cbrt2");
  part(c.u, "*cbrt2^2");
  return out + ")";
}

/// "+12*q^44 -24*q^92 + O(q^301)".
template <class F>
std::string series_to_text(const LaurentSeries<F>& s) {
  std::string out;
  for (const auto& [e, c] : s.terms()) {
    if (!out.empty()) out += " ";
    out += coeff_to_text(c) + "*q^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  if (s.ord()) out += " + O(q^" + std::to_string(*s.ord() + 1) + ")";
  return out;
}

// ---------------------------------------------------------------------------

inline std::string monomial_text(int P, int Q, int R) {
  std::string out;
  auto var = [&](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  var("x", P);
  var("y", Q);
  var("z", R);
  return out.empty() ? "1" : out;
}

inline json elliptic_to_json(const EllipticPotential& ep) {
  json series = json::array();
  for (const auto& s : ep.series)
    series.push_back(json{{"name", s.name}, {"x", s.P}, {"y", s.Q}, {"z", s.R}, {"series", series_to_json(s.series)}});
  return json{{"case", static_cast<int>(ep.kind)}, {"qmax", ep.qmax}, {"fixed", potential_to_json(ep.fixed)},
              {"series", series}};
}

inline EllipticPotential elliptic_from_json(const json& j) {
  EllipticPotential ep;
  ep.kind = elliptic_case(j.at("case").get<int>());
  ep.qmax = j.at("qmax").get<long>();
  ep.fixed = potential_from_json(j.at("fixed"));
  for (const auto& s : j.at("series"))
    ep.series.push_back({s.at("name").get<std::string>(), s.at("x").get<int>(), s.at("y").get<int>(),
                         s.at("z").get<int>(), qseries_from_json(s.at("series"))});
  return ep;
}

inline std::string elliptic_to_text(const EllipticPotential& ep) {
  std::string out = potential_to_text(ep.fixed);
  for (const auto& s : ep.series)
    out += s.name + " [" + monomial_text(s.P, s.Q, s.R) + "]: " + series_to_text(s.series) + "\n";
  return out;
}

inline json mirror_to_json(const MirrorReport& r) {
  return json{{"case", static_cast<int>(r.kind)},
              {"input_order", r.input_order},
              {"sigma", series_to_json(r.sigma)},
              {"i_of_sigma", series_to_json(r.i_of_sigma)},
              {"j_target", series_to_json(r.j_target)},
              {"matched_orders", r.matched_orders},
              {"compared_through", r.compared_through},
              {"i_rational", r.i_rational},
              {"verdict", r.verdict}};
}

inline std::string mirror_to_text(const MirrorReport& r) {
  std::ostringstream os;
  os << "case " << static_cast<int>(r.kind) << " (input series through q^" << r.input_order << ")\n";
  os << "sigma: " << series_to_text(r.sigma) << "\n";
  os << "i(sigma): " << series_to_text(r.i_of_sigma.truncated(r.compared_through)) << "\n";
  os << "j: " << series_to_text(r.j_target) << "\n";
  os << "compared through q^" << r.compared_through << ", " << r.matched_orders.size() << " nonzero coefficients\n";
  os << "verdict: " << (r.verdict ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace orbipot
