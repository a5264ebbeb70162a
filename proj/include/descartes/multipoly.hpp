#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "descartes/rational.hpp"
#include "descartes/unipoly.hpp"

namespace descartes {

/// Variables of the critical-level computation.
enum class Var : std::uint8_t { a = 0, b = 1, f = 2, g = 3, x = 4 };
inline constexpr std::size_t kVarCount = 5;

/// Sparse polynomial over Q in {a, b, f, g, x}. Terms live in an ordered
/// map keyed by exponent vectors, so two equal polynomials have identical
/// term maps and equality is structural.
class MultiPoly {
 public:
  using Exponents = std::array<std::uint8_t, kVarCount>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants promote implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(Var v);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  int degree_in(Var v) const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly derivative(Var v) const;
  /// Antiderivative in v with zero constant of integration.
  MultiPoly antiderivative(Var v) const;
  /// Replaces v by `value` everywhere.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  /// Full evaluation; `point` is indexed by Var.
  Rational evaluate(const std::array<Rational, kVarCount>& point) const;
  /// Evaluates a, b, f, g and leaves a polynomial in x.
  UniPoly specialize_to_x(const Rational& a, const Rational& b, const Rational& f, const Rational& g) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, int e);

/// e.g. "3*a*b^2 - 5*g + 2"; terms in descending graded order.
std::string to_string(const MultiPoly& p);

}  // namespace descartes
