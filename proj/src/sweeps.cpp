#include "descartes/sweeps.hpp"

#include <algorithm>
#include <random>

#include "descartes/catalog.hpp"

namespace descartes {

SweepSummary sweep_targets(const std::vector<RealizationTarget>& targets, const std::vector<bool>& expected,
                           const BudgetFor& budget, std::uint64_t seed, Execution exec) {
  const int n = static_cast<int>(targets.size());
  SweepSummary out;
  out.records.resize(targets.size());
  auto run = [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    SweepRecord& r = out.records[idx];
    r.target = targets[idx];
    r.expected_realizable = expected[idx];
    r.outcome = realize(targets[idx], budget(targets[idx], stream_seed(seed, idx)));
    r.reverified = !r.outcome.witness || verify_witness(*r.outcome.witness);
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n; ++i) run(i);
  } else {
    for (int i = 0; i < n; ++i) run(i);
  }
  for (const auto& r : out.records) {
    out.all_reverified = out.all_reverified && r.reverified;
    if (r.expected_realizable) {
      ++out.realizable_total;
      out.realizable_found += r.outcome.found();
    } else {
      ++out.catalog_total;
      out.catalog_exhausted += !r.outcome.found();
    }
  }
  return out;
}

namespace {

bool has_catalog(int d) { return d >= 1 && d <= 6; }

}  // namespace

SweepSummary couple_sweep(int degree, std::uint64_t seed, Execution exec) {
  std::vector<RealizationTarget> targets;
  std::vector<bool> expected;
  const auto cat = has_catalog(degree) ? catalog(degree) : NonRealizableCatalog{};
  for (const auto& c : enumerate_couples(degree)) {
    targets.emplace_back(c);
    expected.push_back(!cat.contains(c));
  }
  return sweep_targets(targets, expected, [](const RealizationTarget&, std::uint64_t s) {
    return default_couple_budget(s);
  }, seed, exec);
}

SweepSummary scp_sweep(int degree, std::uint64_t seed, Execution exec) {
  std::vector<RealizationTarget> targets;
  std::vector<bool> expected;
  const auto cat = has_catalog(degree) ? catalog(degree) : NonRealizableCatalog{};
  for (const auto& s : enumerate_scps(degree)) {
    targets.emplace_back(s);
    expected.push_back(!cat.contains(s));
  }
  return sweep_targets(targets, expected, [degree](const RealizationTarget&, std::uint64_t s) {
    return default_scp_budget(degree, s);
  }, seed, exec);
}

SweepSummary canonical_order_sweep(int degree, std::uint64_t seed, Execution exec) {
  std::vector<RealizationTarget> targets;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << degree); ++bits) {
    SignPattern p = SignPattern::from_bits(degree, bits);
    targets.emplace_back(OrderCouple{p, canonical_order(p)});
  }
  std::vector<bool> expected(targets.size(), true);
  return sweep_targets(targets, expected, [](const RealizationTarget&, std::uint64_t s) {
    return default_order_budget(s);
  }, seed, exec);
}

SoundnessReport generator_soundness(quartic::Generator g, int samples, std::uint64_t seed, Execution exec) {
  const quartic::RegionLabel target = quartic::spec_of(g).target;
  std::vector<std::vector<Rational>> params(static_cast<std::size_t>(samples));
  std::vector<char> ok(static_cast<std::size_t>(samples), 0);
  auto run = [&](int i) {
    const auto idx = static_cast<std::size_t>(i);
    std::mt19937_64 rng(stream_seed(seed, idx));
    params[idx] = quartic::sample_params(g, rng);
    ok[idx] = quartic::classify(quartic::generate(g, params[idx])) == target;
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) run(i);
  } else {
    for (int i = 0; i < samples; ++i) run(i);
  }
  SoundnessReport out;
  out.samples = samples;
  for (std::size_t i = 0; i < ok.size(); ++i)
    if (!ok[i]) {
      ++out.mismatches;
      out.failing_params.push_back(params[i]);
    }
  return out;
}

namespace {

bool oracle_case(std::mt19937_64& rng, int max_degree) {
  const int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
  auto value = [&] {
    Rational v(std::uniform_int_distribution<int>(1, 40)(rng), std::uniform_int_distribution<int>(1, 8)(rng));
    v.canonicalize();
    return v;
  };
  std::vector<Rational> pos, neg;
  std::vector<std::pair<Rational, Rational>> pairs;
  int left = d, zero = 0;
  while (left > 0) {
    const int kind = std::uniform_int_distribution<int>(0, left >= 2 ? 4 : 3)(rng);
    if (kind == 4) {
      Rational s(std::uniform_int_distribution<int>(-20, 20)(rng), 4);
      s.canonicalize();
      Rational q = s * s / 4 + value();
      pairs.emplace_back(s, q);
      left -= 2;
      continue;
    }
    --left;
    // kind 0 repeats a positive root when there is one
    if (kind == 3) {
      ++zero;
    } else if (kind == 0 && !pos.empty()) {
      pos.push_back(pos[std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(rng)]);
    } else if (kind == 1 || (kind == 0 && pos.empty())) {
      pos.push_back(value());
    } else {
      neg.push_back(-value());
    }
  }
  UniPoly p = from_roots(pos, neg, pairs) * pow(UniPoly::monomial(Rational(1), 1), zero);

  auto distinct = [](std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
  };
  const SignedRootCount c = signed_root_counts(p);
  const bool all_distinct = distinct(pos) == int(pos.size()) && distinct(neg) == int(neg.size()) && zero <= 1;
  return c.pos_with_mult == int(pos.size()) && c.neg_with_mult == int(neg.size()) && c.pos_distinct == distinct(pos) &&
         c.neg_distinct == distinct(neg) && c.zero_mult == zero && c.complex_pairs == int(pairs.size()) &&
         c.all_real_distinct == all_distinct;
}

}  // namespace

OracleReport root_count_oracle(int samples, int max_degree, std::uint64_t seed, Execution exec) {
  std::vector<char> ok(static_cast<std::size_t>(samples), 0);
  auto run = [&](int i) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    ok[static_cast<std::size_t>(i)] = oracle_case(rng, max_degree);
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < samples; ++i) run(i);
  } else {
    for (int i = 0; i < samples; ++i) run(i);
  }
  OracleReport out;
  out.samples = samples;
  out.mismatches = static_cast<int>(std::count(ok.begin(), ok.end(), 0));
  return out;
}

}  // namespace descartes
