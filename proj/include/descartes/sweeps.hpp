#pragma once

// Data-parallel sweeps. Every kernel has a serial and a parallel path that
// produce identical results: each item draws from its own RNG stream
// stream_seed(seed, index), independent of scheduling.

#include <cstdint>
#include <functional>
#include <vector>

#include "descartes/parallel.hpp"
#include "descartes/quartic.hpp"
#include "descartes/realize.hpp"

namespace descartes {

struct SweepRecord {
  RealizationTarget target;
  /// False for catalogued (known non-realizable) targets.
  bool expected_realizable = true;
  SearchOutcome outcome;
  /// Witness re-verified from scratch (true when there is no witness).
  bool reverified = true;
};

struct SweepSummary {
  std::vector<SweepRecord> records;
  int realizable_total = 0;
  int realizable_found = 0;
  int catalog_total = 0;
  int catalog_exhausted = 0;
  bool all_reverified = true;

  /// Every expected-realizable target found, every catalogued one exhausted.
  bool matches_expectation() const {
    return realizable_found == realizable_total && catalog_exhausted == catalog_total && all_reverified;
  }
};

using BudgetFor = std::function<SearchBudget(const RealizationTarget&, std::uint64_t seed)>;

SweepSummary sweep_targets(const std::vector<RealizationTarget>& targets, const std::vector<bool>& expected,
                           const BudgetFor& budget, std::uint64_t seed, Execution exec);

/// All compatible couples of degree d against catalog(d).
SweepSummary couple_sweep(int degree, std::uint64_t seed, Execution exec = Execution::Parallel);
/// All SCPs of degree d against catalog(d).
SweepSummary scp_sweep(int degree, std::uint64_t seed, Execution exec = Execution::Parallel);
/// Every sign pattern of degree d with its canonical order.
SweepSummary canonical_order_sweep(int degree, std::uint64_t seed, Execution exec = Execution::Parallel);

struct SoundnessReport {
  int samples = 0;
  int mismatches = 0;
  std::vector<std::vector<Rational>> failing_params;
};

/// Random in-domain parameters, each classified against the target label.
SoundnessReport generator_soundness(quartic::Generator g, int samples, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

struct OracleReport {
  int samples = 0;
  int mismatches = 0;
};

/// Random products of linear and irreducible quadratic factors, degree
/// 1..max_degree, with repeated roots allowed; Sturm-based signed counts
/// compared with the construction.
OracleReport root_count_oracle(int samples, int max_degree, std::uint64_t seed, Execution exec = Execution::Parallel);

}  // namespace descartes
