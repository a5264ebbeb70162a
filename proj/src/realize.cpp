#include "descartes/realize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "descartes/parallel.hpp"
#include "float_chain.hpp"

namespace descartes {

SearchBudget default_couple_budget(std::uint64_t seed) { return {100000, seed, -6, 6}; }

SearchBudget default_scp_budget(int degree, std::uint64_t seed) {
  return {degree >= 6 ? 1000000u : 100000u, seed, -6, 6};
}

SearchBudget default_order_budget(std::uint64_t seed) { return {100000, seed, -6, 6}; }

int degree_of(const RealizationTarget& target) {
  return std::visit(
      [](const auto& t) -> int {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, Scp>)
          return t.degree();
        else
          return t.pattern.degree();
      },
      target);
}

bool is_internally_compatible(const RealizationTarget& target) {
  if (auto* c = std::get_if<CompatibleCouple>(&target)) return is_compatible(c->pattern, c->pair);
  if (auto* s = std::get_if<Scp>(&target)) return is_valid_scp(*s);
  const auto& o = std::get<OrderCouple>(target);
  auto [changes, preservations] = descartes_pair(o.pattern);
  return o.order.length() == o.pattern.degree() && o.order.count('P') == changes &&
         o.order.count('N') == preservations;
}

std::string describe(const RealizationTarget& target) {
  std::ostringstream os;
  if (auto* c = std::get_if<CompatibleCouple>(&target)) {
    os << "couple (" << c->pattern.str() << ", (" << c->pair.pos << "," << c->pair.neg << "))";
  } else if (auto* s = std::get_if<Scp>(&target)) {
    os << "SCP (";
    bool first = true;
    for (const auto& p : s->pairs()) {
      os << (first ? "" : ",") << "(" << p.pos << "," << p.neg << ")";
      first = false;
    }
    os << ")";
  } else {
    const auto& o = std::get<OrderCouple>(target);
    os << "order couple (" << o.pattern.str() << ", " << o.order.str() << ")";
  }
  return os.str();
}

// ------------------------------------------------------- certification

std::optional<Certificate> certify(const UniPoly& poly, const RealizationTarget& target) {
  if (poly.degree() != degree_of(target) || poly.leading() != 1) return std::nullopt;
  auto pattern = sign_pattern_of(poly);
  if (!pattern) return std::nullopt;

  if (auto* c = std::get_if<CompatibleCouple>(&target)) {
    if (*pattern != c->pattern) return std::nullopt;
    SignedRootCount counts = signed_root_counts(poly);
    if (!counts.all_real_distinct || counts.zero_mult != 0) return std::nullopt;
    if (counts.pos_distinct != c->pair.pos || counts.neg_distinct != c->pair.neg) return std::nullopt;
    return Certificate{*pattern, {{counts.pos_distinct, counts.neg_distinct}}, std::nullopt};
  }
  if (auto* s = std::get_if<Scp>(&target)) {
    auto chain = derivative_chain_scp(poly);
    auto* got = std::get_if<Scp>(&chain);
    if (!got || *got != *s) return std::nullopt;
    return Certificate{*pattern, {got->pairs().begin(), got->pairs().end()}, std::nullopt};
  }
  const auto& o = std::get<OrderCouple>(target);
  if (*pattern != o.pattern) return std::nullopt;
  auto order = moduli_order(poly);
  auto* got = std::get_if<ModuliOrder>(&order);
  if (!got || *got != o.order) return std::nullopt;
  return Certificate{*pattern, {{got->count('P'), got->count('N')}}, *got};
}

bool verify_witness(const Witness& witness) {
  auto cert = certify(witness.poly, witness.target);
  return cert && *cert == witness.certificate;
}

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int sign_of(double v) { return (v > 0) - (v < 0); }

int pattern_sign(const SignPattern& p, int k) { return p[static_cast<std::size_t>(k)] == Sign::Plus ? 1 : -1; }

std::vector<double> to_doubles(const UniPoly& p) {
  std::vector<double> out;
  for (const auto& c : p.ascending()) out.push_back(c.get_d());
  return out;
}

// ------------------------------------------------------- level sampler
//
// Builds P from its top derivative down. With G_1 = x + c_1 and
// G_{k+1} = (k+1) * integral_0^x G_k + c_{k+1}, each G_k is a positive
// multiple of P^(d-k). The root counts of F + c as c varies only change
// where c crosses -F(critical point) or 0, so every admissible c at a
// level is a union of intervals between those breakpoints, read off
// directly. Scaling x fixes |c_1| = 1.

using LevelRule = std::function<bool(int level, CompatiblePair counts, int constant_sign)>;

struct LevelAttempt {
  std::optional<UniPoly> poly;
  int levels_reached = 0;
};

class LevelSampler {
 public:
  LevelSampler(int degree, LevelRule rule) : degree_(degree), rule_(std::move(rule)) {}

  LevelAttempt run(Rng& rng) const {
    std::vector<int> first;
    if (rule_(1, {1, 0}, -1)) first.push_back(-1);
    if (rule_(1, {0, 1}, 1)) first.push_back(1);
    if (first.empty()) return {};
    int c1 = first[std::uniform_int_distribution<std::size_t>(0, first.size() - 1)(rng)];
    UniPoly g(std::vector<Rational>{Rational(c1), Rational(1)});
    std::vector<double> roots{-double(c1)};

    for (int k = 1; k < degree_; ++k) {
      UniPoly f = g.antiderivative() * Rational(k + 1);
      const std::vector<double> fd = to_doubles(f);

      std::vector<double> breaks{0.0};
      double scale = 0.0;
      for (double xi : roots) breaks.push_back(-detail::horner(fd, xi));
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      for (double t : breaks) scale = std::max(scale, std::abs(t));
      for (std::size_t i = 0; i + 1 < fd.size(); ++i) scale = std::max(scale, std::abs(fd[i]));
      if (scale == 0.0) scale = 1.0;

      struct Gap {
        double lo, hi;
      };
      std::vector<Gap> feasible;
      const double inf = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i <= breaks.size(); ++i) {
        double lo = i == 0 ? -inf : breaks[i - 1];
        double hi = i == breaks.size() ? inf : breaks[i];
        double rep;
        if (std::isinf(lo))
          rep = hi - std::max(1.0, std::abs(hi));
        else if (std::isinf(hi))
          rep = lo + std::max(1.0, std::abs(lo));
        else
          rep = 0.5 * (lo + hi);
        if (!(rep > lo && rep < hi)) continue;
        if (rule_(k + 1, detail::shifted_counts(fd, roots, rep), sign_of(rep))) feasible.push_back({lo, hi});
      }
      if (feasible.empty()) return {std::nullopt, k};

      const Gap gap = feasible[std::uniform_int_distribution<std::size_t>(0, feasible.size() - 1)(rng)];
      double c = sample_in(gap.lo, gap.hi, scale, rng);
      Rational cq = snap_to_rational(c, 1e-7);
      if (!(cq.get_d() > gap.lo && cq.get_d() < gap.hi)) cq = Rational(c);
      g = f + UniPoly::constant(cq);
      roots = detail::roots_from_critical(to_doubles(g), roots);
    }
    return {g, degree_};
  }

 private:
  static double sample_in(double lo, double hi, double scale, Rng& rng) {
    if (std::isinf(lo)) return hi - scale * std::exp2(uniform(rng, -8.0, 6.0));
    if (std::isinf(hi)) return lo + scale * std::exp2(uniform(rng, -8.0, 6.0));
    const double w = hi - lo;
    if (uniform(rng, 0.0, 1.0) < 0.5) return lo + w * uniform(rng, 0.02, 0.98);
    const double offset = w * std::exp2(-uniform(rng, 1.0, 24.0));
    return uniform(rng, 0.0, 1.0) < 0.5 ? lo + offset : hi - offset;
  }

  int degree_;
  LevelRule rule_;
};

// ------------------------------------------------------ root hill-climb
//
// Real roots are parametrized by log2 of their moduli and complex pairs by
// (log2 modulus, argument). The loss sums, over coefficients, how far each
// normalized coefficient sits on the wrong side of its target sign; the
// normalizer is the same coefficient with every root replaced by its
// modulus, so each term lies in [0, 1 + tau].

class RootModel {
 public:
  /// Couple mode.
  RootModel(const SignPattern& pattern, CompatiblePair pair)
      : pattern_(pattern), npos_(pair.pos), nneg_(pair.neg), npairs_((pattern.degree() - pair.pos - pair.neg) / 2) {}
  /// Order mode: moduli sorted, letter i gives the sign of the i-th smallest.
  RootModel(const SignPattern& pattern, const ModuliOrder& order)
      : pattern_(pattern), order_(order.str()), npos_(0), nneg_(0), npairs_(0) {}

  void randomize(Rng& rng, int lo, int hi) {
    const std::size_t reals = order_.empty() ? std::size_t(npos_ + nneg_) : order_.size();
    logs_.assign(reals, 0.0);
    for (auto& l : logs_) l = uniform(rng, lo, hi);
    pair_logs_.assign(static_cast<std::size_t>(npairs_), 0.0);
    thetas_.assign(static_cast<std::size_t>(npairs_), 0.0);
    for (auto& l : pair_logs_) l = uniform(rng, lo, hi);
    for (auto& t : thetas_) t = uniform(rng, 0.05, std::numbers::pi - 0.05);
    normalize();
  }

  void perturb(Rng& rng) {
    const std::size_t n = logs_.size() + 2 * pair_logs_.size();
    const std::size_t which = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    const double step = std::normal_distribution<double>(0.0, std::exp2(uniform(rng, -6.0, 2.0)))(rng);
    if (which < logs_.size()) {
      logs_[which] += step;
    } else if (which < logs_.size() + pair_logs_.size()) {
      pair_logs_[which - logs_.size()] += step;
    } else {
      double& t = thetas_[which - logs_.size() - pair_logs_.size()];
      t = std::clamp(t + step * 0.5, 1e-3, std::numbers::pi - 1e-3);
    }
    normalize();
  }

  double loss() const {
    std::vector<double> reals, moduli;
    std::vector<std::pair<double, double>> quads, quad_moduli;
    fill(reals, moduli, quads, quad_moduli);
    auto c = detail::expand_roots(reals, quads);
    std::vector<double> abs_moduli;
    for (double m : moduli) abs_moduli.push_back(-std::abs(m));
    auto m = detail::expand_roots(abs_moduli, quad_moduli);
    const int d = pattern_.degree();
    double total = 0.0;
    for (int j = 0; j <= d; ++j) {
      const double margin = pattern_sign(pattern_, d - j) * c[static_cast<std::size_t>(j)] / m[static_cast<std::size_t>(j)];
      total += std::max(0.0, kMargin - margin);
    }
    return total;
  }

  int matched_signs() const {
    std::vector<double> reals, moduli;
    std::vector<std::pair<double, double>> quads, quad_moduli;
    fill(reals, moduli, quads, quad_moduli);
    auto c = detail::expand_roots(reals, quads);
    int n = 0;
    for (int j = 0; j <= pattern_.degree(); ++j)
      if (sign_of(c[static_cast<std::size_t>(j)]) == pattern_sign(pattern_, pattern_.degree() - j)) ++n;
    return n;
  }

  std::optional<UniPoly> exact() const {
    std::vector<Rational> pos, neg;
    std::vector<std::pair<Rational, Rational>> pairs;
    for (std::size_t i = 0; i < logs_.size(); ++i) {
      Rational r = snap_to_rational(std::exp2(logs_[i]), 1e-9);
      if (r == 0) return std::nullopt;
      (is_positive(i) ? pos : neg).push_back(is_positive(i) ? r : Rational(-r));
    }
    for (std::size_t i = 0; i < pair_logs_.size(); ++i) {
      const double rho = std::exp2(pair_logs_[i]);
      Rational s = snap_to_rational(2 * rho * std::cos(thetas_[i]), 1e-9);
      Rational q = snap_to_rational(rho * rho, 1e-9);
      if (s * s - 4 * q >= 0) return std::nullopt;
      pairs.emplace_back(s, q);
    }
    return from_roots(pos, neg, pairs);
  }

  static constexpr double kMargin = 1e-9;

 private:
  bool is_positive(std::size_t i) const {
    return order_.empty() ? i < static_cast<std::size_t>(npos_) : order_[i] == 'P';
  }

  void normalize() {
    if (!order_.empty()) std::sort(logs_.begin(), logs_.end());
  }

  void fill(std::vector<double>& reals, std::vector<double>& moduli, std::vector<std::pair<double, double>>& quads,
            std::vector<std::pair<double, double>>& quad_moduli) const {
    for (std::size_t i = 0; i < logs_.size(); ++i) {
      const double m = std::exp2(logs_[i]);
      reals.push_back(is_positive(i) ? m : -m);
      moduli.push_back(m);
    }
    for (std::size_t i = 0; i < pair_logs_.size(); ++i) {
      const double rho = std::exp2(pair_logs_[i]);
      const double s = 2 * rho * std::cos(thetas_[i]);
      quads.emplace_back(s, rho * rho);
      quad_moduli.emplace_back(-2 * rho, rho * rho);
    }
  }

  SignPattern pattern_;
  std::string order_;
  int npos_, nneg_, npairs_;
  std::vector<double> logs_, pair_logs_, thetas_;
};

class HillClimber {
 public:
  HillClimber(RootModel model, const SearchBudget& budget) : model_(std::move(model)), budget_(budget) {}

  /// One loss evaluation. Returns an exact candidate when every
  /// coefficient sign is met.
  std::optional<UniPoly> step(Rng& rng) {
    if (!started_ || stall_ > kStallLimit) {
      model_.randomize(rng, budget_.moduli_exponent_lo, budget_.moduli_exponent_hi);
      current_ = model_.loss();
      started_ = true;
      stall_ = 0;
    } else {
      RootModel trial = model_;
      trial.perturb(rng);
      double l = trial.loss();
      if (l < current_) stall_ = 0; else ++stall_;
      if (l <= current_) {
        model_ = std::move(trial);
        current_ = l;
      }
    }
    int matched = model_.matched_signs();
    if (matched > best_matched_) {
      best_matched_ = matched;
      best_model_ = model_;
    }
    if (current_ > 0.0) return std::nullopt;
    stall_ = kStallLimit + 1;  // restart after any candidate, certified or not
    return model_.exact();
  }

  int best_matched() const { return best_matched_; }
  const std::optional<RootModel>& best_model() const { return best_model_; }

 private:
  static constexpr int kStallLimit = 400;
  RootModel model_;
  SearchBudget budget_;
  bool started_ = false;
  int stall_ = 0;
  double current_ = 0.0;
  int best_matched_ = -1;
  std::optional<RootModel> best_model_;
};

LevelRule couple_rule(const CompatibleCouple& couple) {
  const int d = couple.pattern.degree();
  return [pattern = couple.pattern, pair = couple.pair, d](int k, CompatiblePair counts, int s) {
    if (s != pattern_sign(pattern, k)) return false;
    return k < d || counts == pair;
  };
}

LevelRule scp_rule(const Scp& scp) {
  return [scp](int k, CompatiblePair counts, int) { return counts == scp.level(k); };
}

std::string level_histogram(const std::vector<std::uint64_t>& failures, int degree) {
  std::ostringstream os;
  os << "attempts stopped at level:";
  for (int k = 0; k <= degree; ++k)
    if (failures[static_cast<std::size_t>(k)] > 0) os << " " << k + 1 << "->" << failures[static_cast<std::size_t>(k)];
  return os.str();
}

void require_compatible(const RealizationTarget& target) {
  if (!is_internally_compatible(target)) throw std::invalid_argument("target is not compatible: " + describe(target));
}

bool stopped(const std::atomic<bool>* stop, std::uint64_t it) {
  return stop != nullptr && (it & 255u) == 0 && stop->load(std::memory_order_relaxed);
}

SearchOutcome search_couple(const CompatibleCouple& couple, const SearchBudget& budget, const std::atomic<bool>* stop) {
  const RealizationTarget target = couple;
  require_compatible(target);
  const int d = couple.pattern.degree();
  Rng rng(budget.rng_seed);
  LevelSampler levels(d, couple_rule(couple));
  HillClimber climber(RootModel(couple.pattern, couple.pair), budget);
  std::vector<std::uint64_t> failures(static_cast<std::size_t>(d) + 1, 0);
  int deepest = 0;

  SearchOutcome out;
  for (std::uint64_t it = 0; it < budget.max_iterations; ++it) {
    if (stopped(stop, it)) break;
    out.iterations = it + 1;
    std::optional<UniPoly> candidate;
    if (it % 2 == 0) {
      LevelAttempt a = levels.run(rng);
      deepest = std::max(deepest, a.levels_reached);
      if (a.poly)
        candidate = std::move(a.poly);
      else
        ++failures[static_cast<std::size_t>(a.levels_reached)];
    } else {
      candidate = climber.step(rng);
    }
    if (!candidate) continue;
    if (auto cert = certify(*candidate, target)) {
      out.witness = Witness{*candidate, target, *cert};
      return out;
    }
  }
  std::ostringstream os;
  os << "no witness; level sampler satisfied at most " << deepest << " of " << d << " levels ("
     << level_histogram(failures, d) << "); best root configuration matched " << climber.best_matched() << " of "
     << d + 1 << " coefficient signs";
  out.best.description = os.str();
  out.best.score = std::max(double(deepest) / d, double(climber.best_matched()) / (d + 1));
  if (climber.best_model()) out.best.poly = climber.best_model()->exact();
  return out;
}

SearchOutcome search_scp(const Scp& scp, const SearchBudget& budget, const std::atomic<bool>* stop) {
  const RealizationTarget target = scp;
  require_compatible(target);
  const int d = scp.degree();
  Rng rng(budget.rng_seed);
  LevelSampler levels(d, scp_rule(scp));
  std::vector<std::uint64_t> failures(static_cast<std::size_t>(d) + 1, 0);
  int deepest = 0;

  SearchOutcome out;
  for (std::uint64_t it = 0; it < budget.max_iterations; ++it) {
    if (stopped(stop, it)) break;
    out.iterations = it + 1;
    LevelAttempt a = levels.run(rng);
    deepest = std::max(deepest, a.levels_reached);
    if (!a.poly) {
      ++failures[static_cast<std::size_t>(a.levels_reached)];
      continue;
    }
    if (auto cert = certify(*a.poly, target)) {
      out.witness = Witness{*a.poly, target, *cert};
      return out;
    }
  }
  std::ostringstream os;
  os << "no witness; deepest prefix (p_1,n_1)..(p_k,n_k) realized: k = " << deepest << " of " << d << " ("
     << level_histogram(failures, d) << ")";
  out.best.description = os.str();
  out.best.score = double(deepest) / d;
  return out;
}

SearchOutcome search_order(const OrderCouple& oc, const SearchBudget& budget, const std::atomic<bool>* stop) {
  const RealizationTarget target = oc;
  require_compatible(target);
  const int d = oc.pattern.degree();
  Rng rng(budget.rng_seed);
  HillClimber climber(RootModel(oc.pattern, oc.order), budget);

  SearchOutcome out;
  for (std::uint64_t it = 0; it < budget.max_iterations; ++it) {
    if (stopped(stop, it)) break;
    out.iterations = it + 1;
    auto candidate = climber.step(rng);
    if (!candidate) continue;
    if (auto cert = certify(*candidate, target)) {
      out.witness = Witness{*candidate, target, *cert};
      return out;
    }
  }
  std::ostringstream os;
  os << "no witness; best root configuration with order " << oc.order.str() << " matched " << climber.best_matched()
     << " of " << d + 1 << " coefficient signs";
  out.best.description = os.str();
  out.best.score = double(std::max(0, climber.best_matched())) / (d + 1);
  if (climber.best_model()) out.best.poly = climber.best_model()->exact();
  return out;
}

SearchOutcome search(const RealizationTarget& target, const SearchBudget& budget, const std::atomic<bool>* stop) {
  if (auto* c = std::get_if<CompatibleCouple>(&target)) return search_couple(*c, budget, stop);
  if (auto* s = std::get_if<Scp>(&target)) return search_scp(*s, budget, stop);
  return search_order(std::get<OrderCouple>(target), budget, stop);
}

}  // namespace

SearchOutcome realize_couple(const CompatibleCouple& couple, const SearchBudget& budget) {
  return search_couple(couple, budget, nullptr);
}

SearchOutcome realize_scp(const Scp& scp, const SearchBudget& budget) { return search_scp(scp, budget, nullptr); }

SearchOutcome realize_order(const SignPattern& pattern, const ModuliOrder& order, const SearchBudget& budget) {
  return search_order(OrderCouple{pattern, order}, budget, nullptr);
}

SearchOutcome realize(const RealizationTarget& target, const SearchBudget& budget) {
  return search(target, budget, nullptr);
}

SearchOutcome realize_streams(const RealizationTarget& target, const SearchBudget& budget, int streams) {
  if (streams <= 1) return realize(target, budget);
  require_compatible(target);
  std::vector<SearchOutcome> outcomes(static_cast<std::size_t>(streams));
  std::atomic<bool> done{false};
  std::atomic<int> winner{-1};
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < streams; ++s) {
    SearchBudget b = budget;
    b.rng_seed = stream_seed(budget.rng_seed, static_cast<std::uint64_t>(s));
    outcomes[static_cast<std::size_t>(s)] = search(target, b, &done);
    if (outcomes[static_cast<std::size_t>(s)].found()) {
      int expected = -1;
      winner.compare_exchange_strong(expected, s);
      done.store(true);
    }
  }
  if (winner.load() >= 0) return outcomes[static_cast<std::size_t>(winner.load())];
  SearchOutcome merged = outcomes.front();
  for (const auto& o : outcomes) {
    if (&o == &outcomes.front()) continue;
    merged.iterations += o.iterations;
    if (o.best.score > merged.best.score) merged.best = o.best;
  }
  return merged;
}

// -------------------------------------------------------- canonical forms

ModuliOrder canonical_order(const SignPattern& pattern) {
  std::string cp = to_change_preservation(pattern).str();
  std::string word;
  for (auto it = cp.rbegin(); it != cp.rend(); ++it) word += *it == 'c' ? 'P' : 'N';
  return ModuliOrder::parse(word);
}

bool is_canonical_pattern(const SignPattern& pattern) {
  const std::string& s = pattern.str();
  for (std::size_t i = 0; i + 4 <= s.size(); ++i) {
    std::string_view q(s.data() + i, 4);
    if (q == "++--" || q == "--++" || q == "+--+" || q == "-++-") return false;
  }
  return true;
}

bool is_canonical_cp(const ChangePreservationPattern& cp) {
  const std::string& s = cp.str();
  return s.find("pcp") == std::string::npos && s.find("cpc") == std::string::npos;
}

// ---------------------------------------------------------- involutions

Witness transform_witness(const Witness& witness, Involution inv) {
  const auto* couple = std::get_if<CompatibleCouple>(&witness.target);
  if (!couple) throw std::invalid_argument("transform_witness expects a couple witness");
  const int d = witness.poly.degree();
  UniPoly image;
  CompatibleCouple target;
  if (inv == Involution::im) {
    image = witness.poly.reflected() * Rational(d % 2 == 0 ? 1 : -1);
    target = apply_im(*couple);
  } else {
    image = witness.poly.reversed() * Rational(1 / witness.poly(Rational(0)));
    target = apply_ir(*couple);
  }
  auto cert = certify(image, target);
  if (!cert) throw std::logic_error("transported polynomial does not realize the image couple");
  return Witness{std::move(image), target, *cert};
}

}  // namespace descartes
