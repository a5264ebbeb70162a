#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "descartes/combinatorics.hpp"
#include "descartes/roots.hpp"
#include "descartes/scp.hpp"
#include "descartes/unipoly.hpp"

namespace descartes {

struct SearchBudget {
  std::uint64_t max_iterations = 100000;
  std::uint64_t rng_seed = 0;
  /// Initial root moduli are 2^e with e uniform in [lo, hi].
  int moduli_exponent_lo = -6;
  int moduli_exponent_hi = 6;
};

SearchBudget default_couple_budget(std::uint64_t seed = 0);
/// 10^6 iterations at degree 6 and above, 10^5 below.
SearchBudget default_scp_budget(int degree, std::uint64_t seed = 0);
SearchBudget default_order_budget(std::uint64_t seed = 0);

struct OrderCouple {
  SignPattern pattern;
  ModuliOrder order;
  friend bool operator==(const OrderCouple&, const OrderCouple&) = default;
};

using RealizationTarget = std::variant<CompatibleCouple, Scp, OrderCouple>;

int degree_of(const RealizationTarget& target);
/// Descartes compatibility for couples, SCP validity, and letter counts
/// (#P = sign changes, #N = preservations) for order couples.
bool is_internally_compatible(const RealizationTarget& target);
std::string describe(const RealizationTarget& target);

/// Exact transcript of what a polynomial realizes.
struct Certificate {
  SignPattern pattern;
  /// Couples and orders: the single pair (p_d, n_d). SCPs: the whole chain,
  /// top level first.
  std::vector<CompatiblePair> root_counts;
  std::optional<ModuliOrder> order;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Witness {
  UniPoly poly;
  RealizationTarget target;
  Certificate certificate;
};

/// Exact check that `poly` realizes `target`; the certificate on success.
std::optional<Certificate> certify(const UniPoly& poly, const RealizationTarget& target);
/// Recomputes the certificate from the polynomial alone.
bool verify_witness(const Witness& witness);

struct BestPartial {
  std::string description;
  /// Fraction of the target met by the best candidate, in [0, 1].
  double score = 0.0;
  std::optional<UniPoly> poly;
};

struct SearchOutcome {
  std::optional<Witness> witness;
  std::uint64_t iterations = 0;
  BestPartial best;
  bool found() const { return witness.has_value(); }
};

/// Randomized search; exhaustion of the budget is evidence of
/// non-realizability, never a proof. Throws std::invalid_argument when the
/// target is not internally compatible.
SearchOutcome realize_couple(const CompatibleCouple& couple, const SearchBudget& budget);
SearchOutcome realize_scp(const Scp& scp, const SearchBudget& budget);
SearchOutcome realize_order(const SignPattern& pattern, const ModuliOrder& order, const SearchBudget& budget);
SearchOutcome realize(const RealizationTarget& target, const SearchBudget& budget);

/// Runs `streams` independent searches (seeds derived from budget.rng_seed)
/// concurrently, each with the full budget; the first verified witness
/// wins. Only streams == 1 is reproducible.
SearchOutcome realize_streams(const RealizationTarget& target, const SearchBudget& budget, int streams);

/// Change-preservation word read right to left, c -> P, p -> N.
ModuliOrder canonical_order(const SignPattern& pattern);
/// No (+,+,-,-), (-,-,+,+), (+,-,-,+) or (-,+,+,-) among four consecutive
/// signs.
bool is_canonical_pattern(const SignPattern& pattern);
/// No isolated change or preservation: no "pcp" and no "cpc".
bool is_canonical_cp(const ChangePreservationPattern& cp);

enum class Involution { im, ir };

/// Couple witnesses only: P -> (-1)^d P(-x) or x^d P(1/x) / P(0), then
/// re-certified against the image couple. Throws std::invalid_argument for
/// other targets and std::logic_error if re-certification fails.
Witness transform_witness(const Witness& witness, Involution inv);

}  // namespace descartes
