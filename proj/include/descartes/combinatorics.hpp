#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace descartes {

enum class Sign : std::int8_t { Minus = -1, Plus = 1 };

inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Signs of the coefficients of a monic polynomial without vanishing
/// coefficients, leading coefficient first. Always starts with '+'.
/// Ordering is lexicographic on the "+-" text with '+' < '-', which is the
/// bitstring order with + as 0.
class SignPattern {
 public:
  /// Empty placeholder (degree -1); only assignment and comparison are meaningful.
  SignPattern() = default;
  /// Throws std::invalid_argument unless text is over {+,-}, has length
  /// at least 2 and starts with '+'.
  static SignPattern parse(std::string_view text);
  /// Sigma_{m1,...,mn}: m1 pluses, then m2 minuses, and so on.
  static SignPattern from_blocks(std::initializer_list<int> blocks);
  static SignPattern from_blocks(const std::vector<int>& blocks);
  /// Bit k-1 of `minus_bits` set means position k (1..d) is '-'.
  static SignPattern from_bits(int degree, std::uint64_t minus_bits);

  int degree() const { return static_cast<int>(text_.size()) - 1; }
  std::size_t size() const { return text_.size(); }
  Sign operator[](std::size_t i) const { return text_[i] == '+' ? Sign::Plus : Sign::Minus; }
  const std::string& str() const { return text_; }
  /// First k+1 signs: the pattern of the (d-k)-th derivative.
  SignPattern prefix(int k) const;

  friend bool operator==(const SignPattern&, const SignPattern&) = default;
  friend std::strong_ordering operator<=>(const SignPattern& a, const SignPattern& b) {
    return a.text_ <=> b.text_;
  }

 private:
  explicit SignPattern(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

/// A word over {c, p} of length d; c marks a sign change between
/// consecutive coefficients, p a preservation.
class ChangePreservationPattern {
 public:
  ChangePreservationPattern() = default;
  static ChangePreservationPattern parse(std::string_view letters);
  const std::string& str() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int count(char letter) const;
  friend bool operator==(const ChangePreservationPattern&, const ChangePreservationPattern&) = default;

 private:
  explicit ChangePreservationPattern(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// (positive, negative) root counts.
struct CompatiblePair {
  int pos = 0;
  int neg = 0;
  friend auto operator<=>(const CompatiblePair&, const CompatiblePair&) = default;
};

struct CompatibleCouple {
  SignPattern pattern;
  CompatiblePair pair;
  friend bool operator==(const CompatibleCouple&, const CompatibleCouple&) = default;
  friend std::strong_ordering operator<=>(const CompatibleCouple& a, const CompatibleCouple& b) {
    if (auto c = a.pattern <=> b.pattern; c != 0) return c;
    return a.pair <=> b.pair;
  }
};

/// Closure of a couple under {id, i_m, i_r, i_m i_r}; members sorted, so
/// members.front() is the canonical representative.
struct Orbit {
  std::vector<CompatibleCouple> members;
  const CompatibleCouple& representative() const { return members.front(); }
  bool contains(const CompatibleCouple& c) const;
};

int sign_changes(const SignPattern& pattern);
CompatiblePair descartes_pair(const SignPattern& pattern);
/// All (c - 2u, d - c - 2v) >= (0, 0), in decreasing order.
std::vector<CompatiblePair> compatible_pairs(const SignPattern& pattern);
bool is_compatible(const SignPattern& pattern, const CompatiblePair& pair);
/// Throws std::invalid_argument when the pair is not compatible.
CompatibleCouple make_couple(const SignPattern& pattern, const CompatiblePair& pair);

ChangePreservationPattern to_change_preservation(const SignPattern& pattern);
SignPattern from_change_preservation(const ChangePreservationPattern& cp);

/// P(x) -> (-1)^d P(-x): flips every second sign.
SignPattern im_pattern(const SignPattern& pattern);
/// P(x) -> x^d P(1/x) / P(0): reversal, renormalized to a leading '+'.
SignPattern ir_pattern(const SignPattern& pattern);

CompatibleCouple apply_im(const CompatibleCouple& couple);
CompatibleCouple apply_ir(const CompatibleCouple& couple);

Orbit orbit(const CompatibleCouple& couple);

/// Every compatible couple of degree d, patterns in lexicographic order.
std::vector<CompatibleCouple> enumerate_couples(int degree);
/// One orbit per Z2 x Z2 class, ordered by representative.
std::vector<Orbit> enumerate_orbits(int degree);

}  // namespace descartes
