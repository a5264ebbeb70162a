#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "descartes/parallel.hpp"
#include "descartes/rational.hpp"
#include "descartes/unipoly.hpp"

namespace descartes::quartic {

/// Monic x^4 + b3 x^3 + b2 x^2 + b1 x + b0.
struct QuarticPoint {
  Rational b3, b2, b1, b0;

  UniPoly poly() const;
  static QuarticPoint from_poly(const UniPoly& p);  ///< p monic of degree 4
  /// coeff(j) = b_j for 0 <= j <= 3.
  const Rational& coeff(int j) const;
  Rational& coeff(int j);
  friend bool operator==(const QuarticPoint&, const QuarticPoint&) = default;
};

enum class RegionLabel {
  // (+,-,-,-,+) orthant
  R0, R1, R2, R01, R12,
  // (+,-,-,+,+) orthant
  Rd0, Rd1plus, Rd1minus, Rd2, Lplus, Lminus, Mset,
  // b1 = 0 with signs (+,-,-,0,+)
  R0_01, R0_12,
  Other,
};

std::string to_string(RegionLabel label);

enum class Orthant { Sigma131, Sigma122, Boundary, None };
Orthant orthant_of(const QuarticPoint& q);

/// Exact: orthant by coefficient signs, then complex pairs off the
/// discriminant, or the sign structure of gcd(Q, Q') on it.
RegionLabel classify(const QuarticPoint& q);

enum class DiscriminantKind { OffD4, OnD4RealDouble, OnDelta2ComplexDouble };

struct DiscriminantMembership {
  DiscriminantKind kind = DiscriminantKind::OffD4;
  Rational resultant;
  /// Signs (+1 / -1 / 0) of the distinct real multiple roots, increasing.
  std::vector<int> multiple_root_signs;
};

DiscriminantMembership discriminant_membership(const QuarticPoint& q);

// ---------------------------------------------------------- generators

enum class Generator { Q4Minus, Q4Plus, LMinus, LPlus, M };

struct ParamRegionSpec {
  Generator generator;
  std::string name;
  std::vector<std::string> parameters;
  std::vector<std::string> domain;
  RegionLabel target;
};

const std::vector<ParamRegionSpec>& generator_specs();
const ParamRegionSpec& spec_of(Generator g);

/// (x + a/2)^2 (x^2 - f x + g); 0 < a < f, 0 < g < min(f^2/4, af/4).
QuarticPoint param_Q4_minus(const Rational& a, const Rational& f, const Rational& g);
/// (x - f/2)^2 (x^2 + a x + b); 0 < f, f/3 < a < f, af/4 < b < af - f^2/4.
QuarticPoint param_Q4_plus(const Rational& a, const Rational& f, const Rational& b);
/// (x + a/2)^2 (x^2 - f x + g); 0 < a < f, af/4 < g < af - a^2/4, and
/// g != f^2/4 (that slice is the double-double stratum M).
QuarticPoint param_Lminus(const Rational& a, const Rational& f, const Rational& g);
/// (x - f/2)^2 (x^2 + a x + b); f/4 < a < f, 0 < b < min(af - f^2/4, af/4),
/// and b != a^2/4.
QuarticPoint param_Lplus(const Rational& a, const Rational& f, const Rational& b);
/// x^4 + 2(r-h)x^3 + (h^2-4rh+r^2)x^2 + 2rh(h-r)x + r^2h^2, which is
/// (x + r)^2 (x - h)^2; 0 < r < h and h^2 - 4rh + r^2 < 0.
QuarticPoint param_M(const Rational& r, const Rational& h);

/// Same domains without the std::domain_error: callers can probe.
bool in_domain(Generator g, const std::vector<Rational>& params);
QuarticPoint generate(Generator g, const std::vector<Rational>& params);

/// A random in-domain parameter vector on a dyadic grid.
std::vector<Rational> sample_params(Generator g, std::mt19937_64& rng);

// --------------------------------------------------------------- slices

struct SliceAxis {
  int coeff;  ///< j of b_j
  Rational lo, hi;
  int resolution;  ///< >= 2 nodes, endpoints included
};

struct SliceSpec {
  QuarticPoint base;  ///< supplies the two fixed coefficients
  SliceAxis first, second;
};

struct SliceRow {
  Rational coord1, coord2;
  RegionLabel label;
  friend bool operator==(const SliceRow&, const SliceRow&) = default;
};

/// resolution_1 * resolution_2 rows, first axis outermost. Throws
/// std::invalid_argument on a bad axis.
std::vector<SliceRow> slice_grid(const SliceSpec& spec, Execution exec = Execution::Parallel);
std::string slice_csv(const std::vector<SliceRow>& rows);

}  // namespace descartes::quartic
