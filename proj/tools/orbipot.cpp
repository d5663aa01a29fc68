// orbipot: command-line front end.
//
//   orbipot potential A B C (--max-p P | --max-qpow N) [--json]
//   orbipot elliptic 236|244 [--qorder N] [--oracle] [--json]
//   orbipot spherical A B C [--json]
//   orbipot mirror 236|244 [--qorder N] [--json]
//   orbipot verify A B C --max-p P [--tol T] [--json]
//
// Exit codes: 0 ok, 1 domain or usage error, 2 verification failure.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "orbipot/orbipot.hpp"

namespace {

using namespace orbipot;

struct Config {
  int a = 0, b = 0, c = 0;
  std::optional<int> max_p;
  std::optional<long> max_qpow;
  int elliptic_code = 0;
  long qorder = -1;
  double tol = 1e-6;
  bool json = false;
  bool oracle = false;
  bool experimental_elliptic = false;
  unsigned threads = 0;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_potential(const Config& cfg) {
  const Signature sig(cfg.a, cfg.b, cfg.c);
  if (sig.kind() == SignatureKind::spherical)
    throw DomainError("signature " + sig.to_string() + " is spherical; use the 'spherical' command");
  if (sig.kind() == SignatureKind::elliptic && !cfg.experimental_elliptic)
    throw DomainError("signature " + sig.to_string() +
                      " is elliptic; use the 'elliptic' command (or --experimental-elliptic with --max-p)");
  EnumerationOptions opt;
  opt.experimental_elliptic = cfg.experimental_elliptic;
  opt.threads = cfg.threads;

  Potential W;
  json meta{{"signature", {cfg.a, cfg.b, cfg.c}}};
  if (cfg.max_p) {
    W = potential_by_generation(sig, *cfg.max_p, opt);
    meta["max_p"] = *cfg.max_p;
  } else {
    W = potential_by_qpower(sig, *cfg.max_qpow, opt);
    meta["max_qpow"] = *cfg.max_qpow;
  }
  if (cfg.json) {
    meta["terms"] = potential_to_json(W);
    emit(meta);
  } else {
    std::cout << potential_to_text(W);
  }
  return 0;
}

int run_elliptic(const Config& cfg) {
  const EllipticCase c = elliptic_case(cfg.elliptic_code);
  const long qmax = cfg.qorder < 0 ? 300 : cfg.qorder;
  const EllipticPotential ep = cfg.oracle ? elliptic_oracle(c, qmax) : elliptic_closed_form(c, qmax);
  if (cfg.json)
    emit(elliptic_to_json(ep));
  else
    std::cout << elliptic_to_text(ep);
  return 0;
}

int run_spherical(const Config& cfg) {
  const Signature sig(cfg.a, cfg.b, cfg.c);
  const Potential W = spherical(sig);
  if (cfg.json)
    emit(json{{"signature", {cfg.a, cfg.b, cfg.c}}, {"terms", potential_to_json(W)}});
  else
    std::cout << potential_to_text(W);
  return 0;
}

int run_mirror(const Config& cfg) {
  const EllipticCase c = elliptic_case(cfg.elliptic_code);
  const long jtop = *j_reference(c).ord();
  if (cfg.qorder > jtop)
    std::cerr << "note: the j reference is only known through q^" << jtop << "; comparing through q^" << jtop
              << "\n";
  const MirrorReport rep = check_mirror(c, cfg.qorder);
  if (cfg.json)
    emit(mirror_to_json(rep));
  else
    std::cout << mirror_to_text(rep);
  return rep.verdict ? 0 : 2;
}

int run_verify(const Config& cfg) {
  const Signature sig(cfg.a, cfg.b, cfg.c);
  EnumerationOptions opt;
  opt.threads = cfg.threads;
  const VerifyReport rep = verify_invariants(sig, *cfg.max_p, cfg.tol, opt);
  if (cfg.json) {
    json checks = json::array();
    for (const auto& ch : rep.checks)
      checks.push_back(json{{"name", ch.name},
                            {"checked", ch.checked},
                            {"failed", ch.failed},
                            {"passed", ch.passed()},
                            {"samples", ch.samples}});
    emit(json{{"signature", {cfg.a, cfg.b, cfg.c}},
              {"max_p", rep.max_p},
              {"tol", rep.tol},
              {"words", rep.words},
              {"max_residual", rep.max_residual},
              {"checks", checks},
              {"passed", rep.passed()}});
  } else {
    std::cout << "verify " << sig.to_string() << " p<=" << rep.max_p << ": " << rep.words << " words, max residual "
              << rep.max_residual << "\n";
    for (const auto& ch : rep.checks) {
      std::cout << (ch.passed() ? "PASS " : "FAIL ") << ch.name << " (" << ch.checked - ch.failed << "/"
                << ch.checked << ")\n";
      for (const auto& s : ch.samples) std::cout << "  " << s << "\n";
    }
  }
  std::cerr << "verify took " << rep.seconds << " s\n";
  return rep.passed() ? 0 : 2;
}

void add_signature(CLI::App* sub, Config& cfg) {
  sub->add_option("A", cfg.a, "cone order a")->required();
  sub->add_option("B", cfg.b, "cone order b")->required();
  sub->add_option("C", cfg.c, "cone order c")->required();
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Potentials of orbifold spheres P^1(a,b,c)"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "worker threads (0 = ORBIPOT_THREADS or hardware)");

  auto* pot = app.add_subcommand("potential", "enumerate the potential of a hyperbolic signature");
  add_signature(pot, cfg);
  auto* mp = pot->add_option("--max-p", cfg.max_p, "keep generations p <= P");
  auto* mq = pot->add_option("--max-qpow", cfg.max_qpow, "keep terms with q-power <= N");
  mp->excludes(mq);
  pot->add_flag("--experimental-elliptic", cfg.experimental_elliptic, "allow cut-glue on elliptic signatures");
  pot->add_flag("--json", cfg.json);

  auto* ell = app.add_subcommand("elliptic", "closed-form coefficient series for (2,3,6) or (2,4,4)");
  ell->add_option("CASE", cfg.elliptic_code, "236 or 244")->required();
  ell->add_option("--qorder", cfg.qorder, "series complete through q^N (default 300)");
  ell->add_flag("--oracle", cfg.oracle, "use the brute-force polygon enumeration instead");
  ell->add_flag("--json", cfg.json);

  auto* sph = app.add_subcommand("spherical", "polynomial potential of a spherical signature");
  add_signature(sph, cfg);
  sph->add_flag("--json", cfg.json);

  auto* mir = app.add_subcommand("mirror", "inverse mirror map and the j-function check");
  mir->add_option("CASE", cfg.elliptic_code, "236 or 244")->required();
  mir->add_option("--qorder", cfg.qorder, "compare through q^N (default: all printed j coefficients)");
  mir->add_flag("--json", cfg.json);

  auto* ver = app.add_subcommand("verify", "run the invariant suite on generated words");
  add_signature(ver, cfg);
  ver->add_option("--max-p", cfg.max_p, "generations p <= P")->required();
  ver->add_option("--tol", cfg.tol, "group triviality tolerance")->capture_default_str();
  ver->add_flag("--json", cfg.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (pot->parsed()) {
      if (!cfg.max_p && !cfg.max_qpow) {
        std::cerr << "error: potential needs exactly one of --max-p or --max-qpow\n";
        return 1;
      }
      return run_potential(cfg);
    }
    if (ell->parsed()) return run_elliptic(cfg);
    if (sph->parsed()) return run_spherical(cfg);
    if (mir->parsed()) return run_mirror(cfg);
    if (ver->parsed()) return run_verify(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
