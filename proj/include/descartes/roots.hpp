#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "descartes/rational.hpp"
#include "descartes/scp.hpp"
#include "descartes/unipoly.hpp"

namespace descartes {

/// Open interval; a missing bound means infinity on that side.
struct OpenInterval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static OpenInterval whole_line() { return {}; }
  static OpenInterval positive() { return {Rational(0), std::nullopt}; }
  static OpenInterval negative() { return {std::nullopt, Rational(0)}; }
};

/// Sturm chain of the square-free part of a nonzero polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  /// Sign variations at x (zeros dropped).
  int variations_at(const Rational& x) const;
  int variations_at_pos_infinity() const;
  int variations_at_neg_infinity() const;

  /// Distinct real roots in the open interval. Endpoint roots are
  /// handled exactly: variations are right-continuous, so V(a) - V(b)
  /// counts roots in (a, b].
  int count(const OpenInterval& interval) const;

  const UniPoly& squarefree() const { return chain_.front(); }

 private:
  std::vector<UniPoly> chain_;
};

/// Distinct real roots of p in the interval. Throws std::domain_error
/// for the zero polynomial.
int count_roots_in(const UniPoly& p, const OpenInterval& interval);

struct SquarefreeFactor {
  UniPoly factor;  // monic
  int multiplicity;
};

/// Yun decomposition: p = lc(p) * prod factor^multiplicity, factors monic,
/// square-free and pairwise coprime. Constant factors are omitted.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

struct SignedRootCount {
  int pos_with_mult = 0;
  int neg_with_mult = 0;
  int pos_distinct = 0;
  int neg_distinct = 0;
  int zero_mult = 0;
  int complex_pairs = 0;
  /// Every real root is simple.
  bool all_real_distinct = true;
};

SignedRootCount signed_root_counts(const UniPoly& p);

/// Monic prod (x - r) * prod (x^2 - s x + q). Throws std::invalid_argument
/// for a positive root list containing a non-positive value, a negative
/// list containing a non-negative value, or a pair with s^2 >= 4q.
UniPoly from_roots(const std::vector<Rational>& pos_roots, const std::vector<Rational>& neg_roots,
                   const std::vector<std::pair<Rational, Rational>>& complex_pairs);

/// Determinant of the Sylvester matrix. Both arguments nonzero.
Rational sylvester_resultant(const UniPoly& p, const UniPoly& q);

struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Disjoint open intervals with rational endpoints, increasing, each
/// holding exactly one distinct real root; no endpoint is a root.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

/// Shrinks an isolating interval of p until hi - lo <= width.
RootInterval refine_root(const UniPoly& p, RootInterval interval, const Rational& width);

/// Word over {P, N}, moduli read in increasing order.
class ModuliOrder {
 public:
  ModuliOrder() = default;
  static ModuliOrder parse(std::string_view word);
  const std::string& str() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  int count(char letter) const;
  friend bool operator==(const ModuliOrder&, const ModuliOrder&) = default;
  friend auto operator<=>(const ModuliOrder&, const ModuliOrder&) = default;

 private:
  explicit ModuliOrder(std::string word) : word_(std::move(word)) {}
  std::string word_;
};

enum class OrderFailure { NotHyperbolic, EqualModuli };

std::variant<ModuliOrder, OrderFailure> moduli_order(const UniPoly& p);

struct ChainFailure {
  enum class Kind { MultipleRealRoot, ZeroRoot } kind;
  /// Degree j of the offending derivative P^(d-j).
  int level;
};

/// ((p_d,n_d), ..., (p_1,n_1)) from P, P', ..., P^(d-1). Fails when some
/// derivative has a multiple real root or a zero root.
std::variant<Scp, ChainFailure> derivative_chain_scp(const UniPoly& p);

/// Signs of the coefficients; nullopt unless the leading coefficient is
/// positive and no coefficient is zero.
std::optional<SignPattern> sign_pattern_of(const UniPoly& p);

std::string to_string(OrderFailure f);
std::string to_string(const ChainFailure& f);

}  // namespace descartes
