#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "descartes/combinatorics.hpp"
#include "descartes/rational.hpp"

namespace descartes {

/// Sequence of compatible pairs ((p_d,n_d), ..., (p_1,n_1)): the root
/// counts of P, P', ..., P^(d-1). Stored and serialized top level first.
class Scp {
 public:
  Scp() = default;
  explicit Scp(std::vector<CompatiblePair> top_first) : pairs_(std::move(top_first)) {}

  int degree() const { return static_cast<int>(pairs_.size()); }
  /// (p_j, n_j) for 1 <= j <= degree(); (0, 0) for j = 0.
  CompatiblePair level(int j) const;
  std::span<const CompatiblePair> pairs() const { return pairs_; }
  CompatiblePair top() const { return pairs_.front(); }

  friend auto operator<=>(const Scp&, const Scp&) = default;
  friend bool operator==(const Scp&, const Scp&) = default;

 private:
  std::vector<CompatiblePair> pairs_;
};

/// Per-level admissibility of (p_j, n_j) on its own: nonnegative, at most
/// j roots, j - p - n even.
bool admissible_level(const CompatiblePair& pair, int j);
/// Rolle step from level j-1 (`lower`) to level j (`upper`).
bool admissible_step(const CompatiblePair& lower, const CompatiblePair& upper);

bool is_valid_scp(const Scp& scp);

/// Built upward from (p_1, n_1) with admissible_step; sorted.
std::vector<Scp> enumerate_scps(int degree);

struct ScpCountTable {
  int degree = 0;
  std::map<CompatiblePair, Integer> entries;  // E_d(m, n)
  Integer total;                              // F_d
};

/// E_d(m,n) by the recurrence over E_{d-1}, sharing admissible_step with
/// the enumerator.
ScpCountTable count_scps(int degree);

/// sgn(b_j) = (-1)^{p_{d-j}}, p_0 = 0.
SignPattern scp_to_sign_pattern(const Scp& scp);

/// Drops (p_d, n_d); throws std::invalid_argument for degree < 2.
Scp truncate(const Scp& scp);

/// Swaps the components of every pair.
Scp apply_im_scp(const Scp& scp);

/// All valid SCPs whose top pair and induced pattern give `couple`.
std::vector<Scp> scps_for_couple(const CompatibleCouple& couple);

}  // namespace descartes
