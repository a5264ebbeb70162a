#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "descartes/rational.hpp"

namespace descartes {

/// Dense univariate polynomial over Q. Coefficients are kept in ascending
/// order internally; the external (JSON) form is highest degree first.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// an empty coefficient vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly from_highest_first(std::span<const Rational> coeffs);
  static UniPoly from_highest_first(std::initializer_list<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int power);
  /// x - r
  static UniPoly linear_root(const Rational& r);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coeff(int power) const;
  const Rational& leading() const;
  std::span<const Rational> ascending() const { return coeffs_; }
  std::vector<Rational> highest_first() const;

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;

  UniPoly derivative() const;
  UniPoly derivative(int order) const;
  /// Antiderivative with zero constant term.
  UniPoly antiderivative() const;
  UniPoly monic() const;
  /// p(-x)
  UniPoly reflected() const;
  /// x^deg p(1/x)
  UniPoly reversed() const;
  /// Largest k with x^k | p (0 for the zero polynomial).
  int zero_root_multiplicity() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division over Q; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
UniPoly operator/(const UniPoly& num, const UniPoly& den);
UniPoly operator%(const UniPoly& num, const UniPoly& den);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

UniPoly pow(const UniPoly& p, int e);

/// Human-readable form, e.g. "x^4 - 2*x^3 + 4".
std::string to_string(const UniPoly& p);

}  // namespace descartes
