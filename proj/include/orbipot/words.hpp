#pragma once

// Alphabet {alpha, beta, gamma}, cyclic words in canonical rotation, and the
// corner statistics consumed by the area and coefficient formulas.
//
// Words are stored as ASCII strings over "abc" ('a' = alpha, 'b' = beta,
// 'c' = gamma). Plain char comparison then coincides with alpha < beta < gamma.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "orbipot/error.hpp"

namespace orbipot {

enum class Letter : std::uint8_t { alpha = 0, beta = 1, gamma = 2 };

constexpr char to_char(Letter l) { return static_cast<char>('a' + static_cast<int>(l)); }

constexpr bool is_letter(char ch) { return ch == 'a' || ch == 'b' || ch == 'c'; }

inline Letter letter_of(char ch) {
  if (!is_letter(ch)) throw DomainError(std::string("invalid letter '") + ch + "'");
  return static_cast<Letter>(ch - 'a');
}

/// Corner successor: alpha -> beta -> gamma -> alpha.
constexpr char tau(char ch) { return ch == 'c' ? 'a' : static_cast<char>(ch + 1); }
constexpr Letter tau(Letter l) {
  return static_cast<Letter>((static_cast<int>(l) + 1) % 3);
}

/// Successor inside the run word (gamma beta alpha)^infinity.
constexpr char run_next(char ch) { return ch == 'a' ? 'c' : static_cast<char>(ch - 1); }
constexpr Letter run_next(Letter l) {
  return static_cast<Letter>((static_cast<int>(l) + 2) % 3);
}

// ---------------------------------------------------------------------------

enum class SignatureKind { spherical, elliptic, hyperbolic };

inline const char* to_string(SignatureKind k) {
  switch (k) {
    case SignatureKind::spherical: return "spherical";
    case SignatureKind::elliptic: return "elliptic";
    case SignatureKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

/// Orders (a, b, c) of the three orbifold points of P^1(a,b,c).
struct Signature {
  int a = 0;
  int b = 0;
  int c = 0;

  constexpr Signature() = default;
  Signature(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
    if (a < 2 || b < 2 || c < 2)
      throw DomainError("orbifold orders must be >= 2 (the toric A-type with an order-1 point is not supported)");
  }

  /// Sign of 1/a + 1/b + 1/c - 1, computed in integers.
  SignatureKind kind() const {
    const long long lhs = 1LL * b * c + 1LL * a * c + 1LL * a * b;
    const long long rhs = 1LL * a * b * c;
    if (lhs == rhs) return SignatureKind::elliptic;
    return lhs < rhs ? SignatureKind::hyperbolic : SignatureKind::spherical;
  }

  /// Group order of a letter: o(alpha) = a, o(beta) = b, o(gamma) = c.
  int order(Letter l) const {
    switch (l) {
      case Letter::alpha: return a;
      case Letter::beta: return b;
      case Letter::gamma: return c;
    }
    return 0;
  }
  int order(char ch) const { return order(letter_of(ch)); }

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// ---------------------------------------------------------------------------

/// Start index of the lexicographically least rotation (two-pointer scan,
/// linear time).
inline std::size_t least_rotation(std::string_view s) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const char x = s[(i + k) % n];
    const char y = s[(j + k) % n];
    if (x == y) {
      ++k;
      continue;
    }
    if (x > y)
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

/// Smallest p with s == rotation of s by p (p divides |s|).
inline std::size_t smallest_period(std::string_view s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return n % p == 0 ? p : n;
}

/// A cyclic word, held in its least rotation. Two values compare equal iff
/// the underlying sequences are cyclic conjugates.
class CyclicWord {
 public:
  CyclicWord() = default;

  explicit CyclicWord(std::string_view seq) {
    if (seq.empty()) throw DomainError("empty word");
    for (char ch : seq)
      if (!is_letter(ch)) throw DomainError(std::string("invalid letter '") + ch + "' in word");
    const std::size_t r = least_rotation(seq);
    letters_.reserve(seq.size());
    letters_.append(seq.substr(r));
    letters_.append(seq.substr(0, r));
  }

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_[i % letters_.size()]; }

  /// Maximal n with w = u^n.
  int eta() const { return static_cast<int>(letters_.size() / smallest_period(letters_)); }

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  std::string letters_;
};

inline CyclicWord canonical(std::string_view seq) { return CyclicWord(seq); }

// ---------------------------------------------------------------------------

/// Corner statistics of a boundary word: P, Q, R count the cyclic pairs
/// beta-gamma, gamma-alpha, alpha-beta (x-, y-, z-corners).
struct CornerData {
  int P = 0;
  int Q = 0;
  int R = 0;
  int S = 0;
  int p = 0;    // generation index, (length - 2S) / 3
  int eta = 1;  // maximal period

  friend bool operator==(const CornerData&, const CornerData&) = default;
};

inline CornerData corner_counts(const CyclicWord& w) {
  const std::string& s = w.letters();
  const std::size_t n = s.size();
  CornerData cd;
  for (std::size_t i = 0; i < n; ++i) {
    const char x = s[i];
    const char y = s[(i + 1) % n];
    if (y != tau(x)) continue;
    switch (x) {
      case 'b': ++cd.P; break;
      case 'c': ++cd.Q; break;
      case 'a': ++cd.R; break;
    }
  }
  cd.S = cd.P + cd.Q + cd.R;
  const long long rest = static_cast<long long>(n) - 2LL * cd.S;
  if (rest % 3 != 0) throw DomainError("not a boundary word: " + s);
  cd.p = static_cast<int>(rest / 3);
  cd.eta = w.eta();
  return cd;
}

/// Checks that w factors as alternating run blocks (subwords of
/// (gamma beta alpha)^inf) and corner blocks (powers of ab, bc, ca) with the
/// tau-junction rule, and that the run blocks concatenate to a run word of
/// length divisible by 3. [abc] is accepted as the seed triangle; a single
/// corner power such as [(ca)^b] has an empty run part. A pure run word
/// (gamma beta alpha)^k is accepted as the corner-free disc.
inline bool validate_standard(const CyclicWord& w, const Signature& /*sig*/) {
  const std::string& s = w.letters();
  const std::size_t n = s.size();
  if (s == "abc") return true;
  if (n < 2) return false;

  // corner[i]: pair (s[i], s[i+1]) is a corner pair; otherwise it must be a
  // run pair.
  std::vector<char> corner(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const char x = s[i];
    const char y = s[(i + 1) % n];
    if (y == tau(x))
      corner[i] = 1;
    else if (y != run_next(x))
      return false;
  }

  std::vector<char> in_corner(n, 0);
  bool any_run = false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = corner[(i + n - 1) % n] != 0;
    const bool right = corner[i] != 0;
    if (left && right) return false;  // one letter shared by two corner pairs
    in_corner[i] = (left || right) ? 1 : 0;
    if (!in_corner[i]) any_run = true;
  }
  if (!any_run) return true;  // whole word is one corner power

  // Concatenate run letters cyclically starting right after a corner letter
  // (or anywhere, for a pure run word) and check the run pattern.
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_corner[i] && !in_corner[(i + 1) % n]) {
      start = (i + 1) % n;
      break;
    }
  }
  std::string runs;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = (start + k) % n;
    if (!in_corner[i]) runs.push_back(s[i]);
  }
  if (runs.size() % 3 != 0) return false;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i)
    if (runs[i + 1] != run_next(runs[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text input: letters a/b/c (also UTF-8 Greek), grouping "(...)", exponents
// "^n" including negative ones, and upper-case A/B/C as inverse letters.
// Inverses are expanded with a^-1 -> bc, b^-1 -> ca, c^-1 -> ab.

namespace detail {

struct SignedLetter {
  char letter;
  bool inverse;
};
using SignedSeq = std::vector<SignedLetter>;

inline SignedSeq invert(const SignedSeq& s) {
  SignedSeq out(s.rbegin(), s.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : t_(text) {}

  SignedSeq parse() {
    SignedSeq out = sequence();
    skip();
    if (pos_ != t_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError("cannot parse word \"" + std::string(t_) + "\": " + msg + " at offset " +
                      std::to_string(pos_));
  }

  void skip() {
    while (pos_ < t_.size()) {
      const char ch = t_[pos_];
      if (ch == ' ' || ch == '.' || ch == '*' || ch == '\t') {
        ++pos_;
      } else if (t_.substr(pos_, 2) == "\xC2\xB7") {  // middle dot
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  bool greek(char& out) {
    static constexpr std::string_view names[] = {"\xCE\xB1", "\xCE\xB2", "\xCE\xB3"};
    for (int i = 0; i < 3; ++i) {
      if (t_.substr(pos_, 2) == names[i]) {
        pos_ += 2;
        out = static_cast<char>('a' + i);
        return true;
      }
    }
    return false;
  }

  SignedSeq sequence() {
    SignedSeq out;
    for (;;) {
      skip();
      if (pos_ >= t_.size() || t_[pos_] == ')') return out;
      SignedSeq item = atom();
      const long long e = exponent();
      SignedSeq base = e < 0 ? invert(item) : item;
      for (long long i = 0; i < (e < 0 ? -e : e); ++i) out.insert(out.end(), base.begin(), base.end());
    }
  }

  SignedSeq atom() {
    skip();
    const char ch = t_[pos_];
    char g = 0;
    if (ch == '(') {
      ++pos_;
      SignedSeq inner = sequence();
      skip();
      if (pos_ >= t_.size() || t_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (is_letter(ch)) {
      ++pos_;
      return {{ch, false}};
    }
    if (ch == 'A' || ch == 'B' || ch == 'C') {
      ++pos_;
      return {{static_cast<char>(ch - 'A' + 'a'), true}};
    }
    if (greek(g)) return {{g, false}};
    fail("expected a letter or '('");
  }

  long long exponent() {
    skip();
    if (pos_ >= t_.size() || t_[pos_] != '^') return 1;
    ++pos_;
    bool braces = false;
    if (pos_ < t_.size() && t_[pos_] == '{') {
      braces = true;
      ++pos_;
    }
    bool neg = false;
    if (pos_ < t_.size() && (t_[pos_] == '-' || t_[pos_] == '+')) neg = t_[pos_++] == '-';
    const std::size_t begin = pos_;
    long long v = 0;
    while (pos_ < t_.size() && t_[pos_] >= '0' && t_[pos_] <= '9') {
      v = v * 10 + (t_[pos_++] - '0');
      if (v > 1'000'000) fail("exponent too large");
    }
    if (pos_ == begin) fail("expected an exponent");
    if (braces) {
      if (pos_ >= t_.size() || t_[pos_] != '}') fail("missing '}'");
      ++pos_;
    }
    return neg ? -v : v;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text into a plain letter sequence over "abc".
inline std::string parse_letters(std::string_view text) {
  const detail::SignedSeq seq = detail::WordParser(text).parse();
  std::string out;
  out.reserve(seq.size() * 2);
  for (const auto& l : seq) {
    if (!l.inverse) {
      out.push_back(l.letter);
    } else {
      out.push_back(tau(l.letter));
      out.push_back(tau(tau(l.letter)));
    }
  }
  return out;
}

inline CyclicWord parse_word(std::string_view text) { return CyclicWord(parse_letters(text)); }

}  // namespace orbipot

template <>
struct std::hash<orbipot::CyclicWord> {
  std::size_t operator()(const orbipot::CyclicWord& w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
