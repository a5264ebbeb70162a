#pragma once

// Floating-point helpers for proposing search candidates. Nothing here is
// trusted: every candidate is re-verified with exact arithmetic.

#include <span>
#include <vector>

#include "descartes/combinatorics.hpp"

namespace descartes::detail {

double horner(std::span<const double> ascending, double x);

/// Real roots of p, given all real roots of p' sorted increasingly. p is
/// monotone between consecutive critical points, so each sign change is
/// bracketed and bisected.
std::vector<double> roots_from_critical(std::span<const double> ascending, std::span<const double> critical);

/// Root counts of F + c where F(0) = 0, F has positive leading coefficient
/// and `critical` holds the sorted real roots of F'.
CompatiblePair shifted_counts(std::span<const double> f_ascending, std::span<const double> critical, double c);

/// Coefficients (ascending) of the monic polynomial with the given real
/// roots and quadratic factors x^2 - s x + q.
std::vector<double> expand_roots(std::span<const double> real_roots, std::span<const std::pair<double, double>> quads);

}  // namespace descartes::detail
