#pragma once

// Invariant suite over every generated word of a hyperbolic signature.
// Each check counts how many items it looked at and how many failed; the
// first few failures are kept as messages.

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "orbipot/cutglue.hpp"
#include "orbipot/grouporacle.hpp"
#include "orbipot/potential.hpp"
#include "orbipot/words.hpp"

namespace orbipot {

struct CheckResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> samples;  // first few failures

  explicit CheckResult(std::string n) : name(std::move(n)) {}

  bool passed() const { return failed == 0; }

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (samples.size() < 5) samples.push_back(what);
  }
};

struct VerifyReport {
  Signature sig{4, 4, 4};
  int max_p = 0;
  double tol = 1e-6;
  long words = 0;
  double max_residual = 0;
  double seconds = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed()) return false;
    return true;
  }
};

inline VerifyReport verify_invariants(const Signature& sig, int max_p, double tol = 1e-6,
                                      const EnumerationOptions& opt = {}) {
  if (sig.kind() != SignatureKind::hyperbolic)
    throw DomainError("verify needs a hyperbolic signature, got " + std::string(to_string(sig.kind())) + " " +
                      sig.to_string());
  if (max_p < 0) throw DomainError("max-p must be >= 0");
  const auto t0 = std::chrono::steady_clock::now();

  VerifyReport rep;
  rep.sig = sig;
  rep.max_p = max_p;
  rep.tol = tol;

  CheckResult standard("standard-representative");
  CheckResult length("length = 2S+3p");
  CheckResult eta("eta divides 2p+S");
  CheckResult trivial("group triviality");
  CheckResult area_int("area positive integer");
  CheckResult area_mono("area increases along apply");
  CheckResult diagram("diagram counts and Euler identity");

  const auto gens = generations(sig, StopPolicy::max_generation(max_p), opt);
  const TriangleRep<double> group = build_rep<double>(sig, tol);

  auto area_of = [&](const CyclicWord& w) -> std::optional<long> {
    const CornerData cd = corner_counts(w);
    const Rational ar = area(cd.P, cd.Q, cd.R, sig);
    if (!is_integer(ar) || ar <= 0) return std::nullopt;
    return ar.get_num().get_si();
  };

  for (const auto& g : gens) {
    for (const auto& w : g.words) {
      ++rep.words;
      const std::string& s = w.letters();
      const CornerData cd = corner_counts(w);

      standard.record(validate_standard(w, sig), s);
      length.record(static_cast<long>(w.size()) == 2L * cd.S + 3L * cd.p && cd.p == g.p,
                    s + " (p=" + std::to_string(cd.p) + ", generation " + std::to_string(g.p) + ")");
      eta.record((2L * cd.p + cd.S) % cd.eta == 0, s + " (eta=" + std::to_string(cd.eta) + ")");

      const double res = triviality_residual(w, group);
      rep.max_residual = std::max(rep.max_residual, res);
      trivial.record(res < tol, s + " (residual " + std::to_string(res) + ")");

      const auto ar = area_of(w);
      area_int.record(ar.has_value(), s + " (area " + to_string(area(cd.P, cd.Q, cd.R, sig)) + ")");

      if (g.p >= 0) {
        bool ok = true;
        std::string why;
        try {
          const DiagramCounts dc = diagram_counts(cd.p, cd.P, cd.Q, cd.R, sig);
          const long cells[] = {dc.v_W, dc.v_A, dc.v_B, dc.v_C, dc.f3, dc.f5, dc.f6, dc.e_x, dc.e_m, dc.e_d};
          for (long v : cells)
            if (v < 0) ok = false;
          if (dc.euler() != 1) ok = false;
          if (!ok) why = "negative count or Euler = " + std::to_string(dc.euler());
        } catch (const DomainError& e) {
          ok = false;
          why = e.what();
        }
        diagram.record(ok, s + " " + why);
      }

      if (g.p >= max_p || !ar) continue;
      for (const CutSite& site : find_cut_sites(w, sig)) {
        const CyclicWord child = apply(w, site, sig, opt);
        const auto ca = area_of(child);
        area_mono.record(ca && *ca > *ar, s + " -> " + child.letters());
      }
    }
  }

  rep.checks = {standard, length, eta, trivial, area_int, area_mono, diagram};
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace orbipot
