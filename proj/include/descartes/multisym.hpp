#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "descartes/multipoly.hpp"
#include "descartes/parallel.hpp"

namespace descartes::multisym {

/// W = (x+1)(x+a)(x+b)(x-f)(x-g), expanded.
MultiPoly build_W();
/// M(x) = integral of W from -1 to x.
MultiPoly build_M();
/// M with x := g.
MultiPoly M_at_g();
/// M(g) - M(-b).
MultiPoly M_diamond();

// Closed forms quoted by the critical-level argument, transcribed term by
// term; the identity suite checks each against the expansions above.
MultiPoly R_form();
MultiPoly M_star_form();
MultiPoly neg_M_star_at_g1a_form();
MultiPoly dM_star_dg_form();
MultiPoly M_tilde_factor_form();
MultiPoly V_form();
MultiPoly V_at_g1a_fb_form();
MultiPoly dV_dg_form();
MultiPoly dV_dg_at_g1a_form();
MultiPoly d2V_dg2_form();
MultiPoly H_form();

bool verify_identity(const MultiPoly& lhs, const MultiPoly& rhs);

struct IdentityCheck {
  std::string name;
  std::string statement;
  /// Certified identities must hold; probes record which of several
  /// candidate readings of a display is true.
  bool certified = true;
  bool holds = false;
  MultiPoly difference;  // lhs - rhs
};

std::vector<IdentityCheck> verify_main_identities();
std::vector<IdentityCheck> verify_derivative_formulas();
/// Both suites, main identities first.
std::vector<IdentityCheck> verify_identities();

struct ParamPoint {
  Rational a, b, f, g;
  /// 0 < f < b < a < 1 and g > 1 + a + (b - f).
  bool is_admissible() const;
};

class DegenerateLevels : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Levels M(xi_j) at xi = (-1, -a, -b, f, g). The primitive is pinned by
/// M(-1) = 0, so the free additive constant is 0.
struct CriticalLevels {
  std::array<Rational, 5> levels;
  Rational constant{0};
  bool alternates() const;
};

/// Throws std::invalid_argument for an inadmissible point and
/// DegenerateLevels when two levels coincide.
CriticalLevels critical_levels(const ParamPoint& point);

/// f < b < a on a grid of step 1/4096 in (0,1); g = 1 + a + (b - f) + delta
/// with delta log-uniform over [2^-10, 2^6], snapped to a rational.
ParamPoint sample_param_point(std::mt19937_64& rng);

struct ClaimTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
};

struct Counterexample {
  std::uint64_t index;
  ParamPoint point;
  std::string claim;
};

struct SignClaimReport {
  std::uint64_t samples = 0;
  std::uint64_t degenerate = 0;
  std::vector<ClaimTally> claims;
  std::vector<Counterexample> counterexamples;
  bool all_hold() const { return counterexamples.empty(); }
};

/// Per-point outcome of every claim, in the order of claim_names().
std::vector<std::string> claim_names();
struct PointVerdict {
  bool degenerate = false;
  std::vector<bool> held;
};
PointVerdict check_point(const ParamPoint& point);

/// Sample i uses RNG stream stream_seed(seed, i); the report is identical
/// for both execution modes.
SignClaimReport check_sign_claims(std::uint64_t samples, std::uint64_t seed,
                                  Execution exec = Execution::Parallel);

}  // namespace descartes::multisym
