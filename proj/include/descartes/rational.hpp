#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace descartes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q", or a finite decimal such as "-0.125". The result is
/// exact; throws std::invalid_argument on malformed text or a zero
/// denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

double to_double(const Rational& q);

/// The rational of least denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

/// A short rational within relative distance `rel` of `v` (v finite).
Rational snap_to_rational(double v, double rel = 1e-9);

}  // namespace descartes
