#pragma once

// Cut words, glue words and the cut-glue rewriting that realizes an
// elementary move on a boundary word, plus breadth-first enumeration of the
// generation sets S^p with canonical-form deduplication.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orbipot/area.hpp"
#include "orbipot/words.hpp"

namespace orbipot {

/// Occurrence of cut(theta, k) in a word, starting at index `start` of the
/// canonical letter sequence and spanning k + 4 letters cyclically.
struct CutSite {
  std::size_t start = 0;
  Letter theta = Letter::alpha;
  int k = 0;

  int span() const { return k + 4; }
  friend bool operator==(const CutSite&, const CutSite&) = default;
};

struct EnumerationOptions {
  /// Run cut-glue on elliptic signatures too. Results are exploratory and
  /// must be cross-checked against the lattice-sum closed forms.
  bool experimental_elliptic = false;
  /// Worker threads for expanding a generation; 0 means default_thread_count().
  unsigned threads = 0;
};

/// Hardware concurrency, capped by the ORBIPOT_THREADS environment variable.
inline unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ORBIPOT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace detail {

inline void require_enumerable(const Signature& sig, const EnumerationOptions& opt) {
  const SignatureKind kind = sig.kind();
  if (kind == SignatureKind::hyperbolic) return;
  if (kind == SignatureKind::elliptic && opt.experimental_elliptic) return;
  throw DomainError("cut-glue enumeration requires hyperbolic signature, got " +
                    std::string(to_string(kind)) + " " + sig.to_string());
}

/// Order-2 points must sit in the alpha slot with b <= c; the a = 2 glue
/// formulas are written for that labelling.
inline void require_ordered(const Signature& sig) {
  if (sig.a >= 3 && sig.b >= 3 && sig.c >= 3) return;
  if (sig.a != 2 || sig.b > sig.c || sig.b < 3)
    throw DomainError("signatures with an order-2 point must be given as (2,b,c) with 3 <= b <= c, got " +
                      sig.to_string());
}

inline void append_power(std::string& out, std::string_view block, int n) {
  if (n < 0) throw DomainError("negative block exponent in glue word");
  for (int i = 0; i < n; ++i) out.append(block);
}

/// The a = 2 families: cut(alpha,3m), cut(alpha,3m+1), cut(gamma,3m-1),
/// cut(gamma,3m).
enum class OrderTwoFamily { alpha0, alpha1, gamma2, gamma0 };

inline OrderTwoFamily order_two_family(Letter theta, int k, int& m) {
  if (theta == Letter::alpha) {
    if (k % 3 == 0) {
      m = k / 3;
      return OrderTwoFamily::alpha0;
    }
    if (k % 3 == 1) {
      m = k / 3;
      return OrderTwoFamily::alpha1;
    }
  } else if (theta == Letter::gamma) {
    if (k % 3 == 2) {
      m = (k + 1) / 3;
      return OrderTwoFamily::gamma2;
    }
    if (k % 3 == 0) {
      m = k / 3;
      return OrderTwoFamily::gamma0;
    }
  }
  throw DomainError("forbidden cut for a=2");
}

}  // namespace detail

/// theta . w . tau(theta'), where w is the length-(k+2) run subword starting
/// at tau(theta) and theta' is its last letter.
inline std::string cut_word(Letter theta, int k, const Signature& sig) {
  if (k < 0) throw DomainError("cut parameter k must be non-negative");
  std::string out;
  out.reserve(static_cast<std::size_t>(k) + 4);
  out.push_back(to_char(theta));
  char ch = tau(to_char(theta));
  for (int i = 0; i < k + 2; ++i) {
    out.push_back(ch);
    if (i + 1 < k + 2) ch = run_next(ch);
  }
  out.push_back(tau(ch));
  if (sig.a == 2 && (theta == Letter::beta || out.back() == 'c')) throw DomainError("forbidden cut for a=2");
  return out;
}

/// Replacement word for cut(theta, k).
///
/// a, b, c >= 3: with theta_1 theta_2 ... the run subword starting at theta,
///   theta_1 (theta_2 theta_1)^{o(theta_3)-2} theta_2 (theta_3 theta_2)^{o(theta_4)-3} theta_3 ...
///   theta_{k+2} (theta_{k+3} theta_{k+2})^{o(theta_{k+4})-2} theta_{k+3},
/// i.e. exponent o-2 on the first and last corner block, o-3 in between.
/// a = 2: the four explicit families, for b >= 4 and for b = 3.
inline std::string glue_word(Letter theta, int k, const Signature& sig,
                             const EnumerationOptions& opt = {}) {
  detail::require_enumerable(sig, opt);
  detail::require_ordered(sig);
  if (k < 0) throw DomainError("cut parameter k must be non-negative");

  std::string out;
  if (sig.a >= 3) {
    std::vector<char> th(static_cast<std::size_t>(k) + 4);
    th[0] = to_char(theta);
    for (std::size_t i = 1; i < th.size(); ++i) th[i] = run_next(th[i - 1]);
    // th[i] is theta_{i+1}
    for (int i = 0; i < k + 2; ++i) {
      out.push_back(th[i]);
      const bool outer = (i == 0 || i == k + 1);
      const int e = sig.order(th[i + 2]) - (outer ? 2 : 3);
      const char pair[2] = {th[i + 1], th[i]};
      detail::append_power(out, std::string_view(pair, 2), e);
    }
    out.push_back(th[k + 2]);
    return out;
  }

  int m = 0;
  const detail::OrderTwoFamily fam = detail::order_two_family(theta, k, m);
  const int b = sig.b, c = sig.c;
  using detail::append_power;
  using F = detail::OrderTwoFamily;

  // Case 3 glue(alpha, 3m) carries the exponent m - 1; for m = 0 the move is
  // the one producing the first-generation word, whose glue word
  // alpha (gamma alpha)^{b-2} gamma beta is shared with the b >= 4 family.
  if (b >= 4 || (b == 3 && fam == F::alpha0 && m == 0)) {
    switch (fam) {
      case F::alpha0:
        out = "a";
        append_power(out, "ca", b - 3);
        for (int i = 0; i < m; ++i) {
          out += "cb";
          append_power(out, "ab", c - 4);
          out += "a";
          append_power(out, "ca", b - 4);
        }
        out += "ca";
        out += "cb";
        break;
      case F::alpha1:
        out = "a";
        append_power(out, "ca", b - 3);
        out += "cb";
        append_power(out, "ab", c - 4);
        for (int i = 0; i < m; ++i) {
          out += "a";
          append_power(out, "ca", b - 4);
          out += "cb";
          append_power(out, "ab", c - 4);
        }
        out += "ab";
        out += "a";
        break;
      case F::gamma2:
        out = "cb";
        append_power(out, "ab", c - 3);
        for (int i = 0; i < m - 1; ++i) {
          out += "a";
          append_power(out, "ca", b - 4);
          out += "cb";
          append_power(out, "ab", c - 4);
        }
        out += "a";
        append_power(out, "ca", b - 3);
        out += "cb";
        break;
      case F::gamma0:
        out = "cb";
        append_power(out, "ab", c - 3);
        for (int i = 0; i < m; ++i) {
          out += "a";
          append_power(out, "ca", b - 4);
          out += "cb";
          append_power(out, "ab", c - 4);
        }
        out += "ab";
        out += "a";
        break;
    }
    return out;
  }

  // b == 3
  switch (fam) {
    case F::alpha0:
      out = "acb";
      append_power(out, "ab", c - 5);
      for (int i = 0; i < m - 1; ++i) {
        out += "acb";
        append_power(out, "ab", c - 6);
      }
      out += "ab";
      out += "acb";
      break;
    case F::alpha1:
      out = "acb";
      out += "ab";
      for (int i = 0; i < m; ++i) {
        append_power(out, "ab", c - 6);
        out += "acb";
      }
      append_power(out, "ab", c - 4);
      out += "a";
      break;
    case F::gamma2:
      out = "cb";
      append_power(out, "ab", c - 4);
      for (int i = 0; i < m - 1; ++i) {
        out += "acb";
        append_power(out, "ab", c - 6);
      }
      out += "ab";
      out += "acb";
      break;
    case F::gamma0:
      out = "cb";
      append_power(out, "ab", c - 4);
      for (int i = 0; i < m; ++i) {
        out += "acb";
        append_power(out, "ab", c - 6);
      }
      out += "ab";
      out += "ab";
      out += "a";
      break;
  }
  return out;
}

/// Every cyclic position where a cut word occurs. At a given start the
/// run length, hence k, is forced.
inline std::vector<CutSite> find_cut_sites(const CyclicWord& w, const Signature& sig) {
  const std::string& s = w.letters();
  const std::size_t n = s.size();
  std::vector<CutSite> sites;
  if (sig.a == 2 && (s == "abc" || s == "bcbc")) return sites;
  for (std::size_t i = 0; i < n; ++i) {
    const char theta = s[i];
    if (s[(i + 1) % n] != tau(theta)) continue;
    std::size_t run = 1;  // letters i+1 .. i+run follow the run pattern
    while (run < n && s[(i + 1 + run) % n] == run_next(s[(i + run) % n])) ++run;
    if (run < 2 || run + 3 > n) continue;
    const char last = s[(i + run) % n];
    if (s[(i + run + 1) % n] != tau(last)) continue;
    const int k = static_cast<int>(run) - 2;
    if (static_cast<std::size_t>(k) + 4 >= n) continue;
    if (sig.a == 2 && (theta == 'b' || tau(last) == 'c')) continue;
    sites.push_back(CutSite{i, letter_of(theta), k});
  }
  return sites;
}

/// Replaces the cut word at `site` with the matching glue word.
inline CyclicWord apply(const CyclicWord& w, const CutSite& site, const Signature& sig,
                        const EnumerationOptions& opt = {}) {
  const std::string& s = w.letters();
  const std::size_t n = s.size();
  const std::size_t span = static_cast<std::size_t>(site.span());
  if (site.k < 0 || site.start >= n || span >= n) throw DomainError("invalid cut site");
  const std::string cut = cut_word(site.theta, site.k, sig);
  for (std::size_t j = 0; j < span; ++j)
    if (s[(site.start + j) % n] != cut[j]) throw DomainError("invalid cut site: cut word not present");

  std::string out = glue_word(site.theta, site.k, sig, opt);
  out.reserve(out.size() + n - span);
  for (std::size_t j = span; j < n; ++j) out.push_back(s[(site.start + j) % n]);
  return CyclicWord(out);
}

/// All words reachable from w by one cut-glue operation (with repeats).
inline std::vector<CyclicWord> children(const CyclicWord& w, const Signature& sig,
                                        const EnumerationOptions& opt = {}) {
  std::vector<CyclicWord> out;
  for (const CutSite& site : find_cut_sites(w, sig)) out.push_back(apply(w, site, sig, opt));
  return out;
}

// ---------------------------------------------------------------------------

struct GenerationSet {
  int p = -1;
  std::vector<CyclicWord> words;  // sorted, unique
};

class StopPolicy {
 public:
  enum class Kind { max_generation, max_qpower };

  static StopPolicy max_generation(int p) { return StopPolicy(Kind::max_generation, p); }
  static StopPolicy max_qpower(long n) { return StopPolicy(Kind::max_qpower, n); }

  Kind kind() const { return kind_; }
  long value() const { return value_; }

 private:
  StopPolicy(Kind k, long v) : kind_(k), value_(v) {}
  Kind kind_;
  long value_;
};

inline std::vector<CyclicWord> seed_words(const Signature& sig) {
  auto power = [](std::string_view block, int n) {
    std::string s;
    detail::append_power(s, block, n);
    return CyclicWord(s);
  };
  std::vector<CyclicWord> s0 = {power("ab", sig.c), power("bc", sig.a), power("ca", sig.b)};
  std::sort(s0.begin(), s0.end());
  return s0;
}

/// Children of every parent, merged into a sorted unique set. The parents
/// are split into contiguous chunks, one per worker; the merge is a sort, so
/// the result does not depend on scheduling.
inline std::vector<CyclicWord> expand_generation(const std::vector<CyclicWord>& parents,
                                                 const Signature& sig,
                                                 const EnumerationOptions& opt = {}) {
  const unsigned threads =
      std::max(1u, std::min<unsigned>(opt.threads ? opt.threads : default_thread_count(),
                                      static_cast<unsigned>(parents.size() / 64 + 1)));
  std::vector<std::vector<CyclicWord>> parts(threads);
  auto work = [&](unsigned t) {
    const std::size_t lo = parents.size() * t / threads;
    const std::size_t hi = parents.size() * (t + 1) / threads;
    auto& part = parts[t];
    for (std::size_t i = lo; i < hi; ++i)
      for (auto& child : children(parents[i], sig, opt)) part.push_back(std::move(child));
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<CyclicWord> merged;
  for (auto& part : parts) {
    if (merged.empty()) {
      merged = std::move(part);
      continue;
    }
    std::vector<CyclicWord> next;
    next.reserve(merged.size() + part.size());
    std::set_union(std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()),
                   std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()),
                   std::back_inserter(next));
    merged = std::move(next);
  }
  return merged;
}

/// S^{-1}, S^0, S^1, ... until the stop policy is met.
///
/// Under max_qpower(N) a word whose area exceeds N is kept in its generation
/// but not expanded (children have strictly larger area), and enumeration
/// stops once a whole generation lies above N.
inline std::vector<GenerationSet> generations(const Signature& sig, const StopPolicy& stop,
                                              const EnumerationOptions& opt = {}) {
  detail::require_enumerable(sig, opt);
  detail::require_ordered(sig);
  const bool by_area = stop.kind() == StopPolicy::Kind::max_qpower;
  if (by_area && sig.kind() == SignatureKind::elliptic)
    throw DomainError("max-qpower enumeration needs the area formula, which is degenerate for elliptic signatures");

  auto within = [&](const CyclicWord& w) {
    if (!by_area) return true;
    const CornerData cd = corner_counts(w);
    return area(cd.P, cd.Q, cd.R, sig) <= stop.value();
  };

  std::vector<GenerationSet> out;
  out.push_back({-1, {CyclicWord("abc")}});
  if (!by_area && stop.value() < 0) return out;
  out.push_back({0, seed_words(sig)});

  for (int p = 1;; ++p) {
    if (!by_area && p > stop.value()) break;
    std::vector<CyclicWord> parents;
    for (const auto& w : out.back().words)
      if (within(w)) parents.push_back(w);
    if (parents.empty()) break;
    GenerationSet next{p, expand_generation(parents, sig, opt)};
    if (next.words.empty()) break;
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace orbipot
