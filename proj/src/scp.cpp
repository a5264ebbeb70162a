#include "descartes/scp.hpp"

#include <algorithm>
#include <stdexcept>

namespace descartes {

CompatiblePair Scp::level(int j) const {
  if (j == 0) return {0, 0};
  if (j < 0 || j > degree()) throw std::out_of_range("SCP level out of range");
  return pairs_[static_cast<std::size_t>(degree() - j)];
}

bool admissible_level(const CompatiblePair& pair, int j) {
  return pair.pos >= 0 && pair.neg >= 0 && pair.pos + pair.neg <= j && (j - pair.pos - pair.neg) % 2 == 0;
}

bool admissible_step(const CompatiblePair& lower, const CompatiblePair& upper) {
  return upper.pos <= lower.pos + 1 && upper.neg <= lower.neg + 1 &&
         upper.pos + upper.neg <= lower.pos + lower.neg + 1;
}

bool is_valid_scp(const Scp& scp) {
  const int d = scp.degree();
  if (d < 1) return false;
  const CompatiblePair first = scp.level(1);
  if (first != CompatiblePair{1, 0} && first != CompatiblePair{0, 1}) return false;
  for (int j = 1; j <= d; ++j)
    if (!admissible_level(scp.level(j), j)) return false;
  for (int j = 2; j <= d; ++j)
    if (!admissible_step(scp.level(j - 1), scp.level(j))) return false;
  return true;
}

namespace {

std::vector<CompatiblePair> level_candidates(int j) {
  std::vector<CompatiblePair> out;
  for (int p = 0; p <= j; ++p)
    for (int n = 0; p + n <= j; ++n)
      if (admissible_level({p, n}, j)) out.push_back({p, n});
  return out;
}

}  // namespace

std::vector<Scp> enumerate_scps(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  // Bottom-up chains, stored (p_1,n_1) first while growing.
  std::vector<std::vector<CompatiblePair>> chains{{{1, 0}}, {{0, 1}}};
  for (int j = 2; j <= degree; ++j) {
    const auto candidates = level_candidates(j);
    std::vector<std::vector<CompatiblePair>> next;
    for (const auto& chain : chains)
      for (const auto& c : candidates)
        if (admissible_step(chain.back(), c)) {
          next.push_back(chain);
          next.back().push_back(c);
        }
    chains = std::move(next);
  }
  std::vector<Scp> out;
  out.reserve(chains.size());
  for (auto& chain : chains) {
    std::reverse(chain.begin(), chain.end());
    out.emplace_back(std::move(chain));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScpCountTable count_scps(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  std::map<CompatiblePair, Integer> table{{{1, 0}, 1}, {{0, 1}, 1}};
  for (int j = 2; j <= degree; ++j) {
    std::map<CompatiblePair, Integer> next;
    for (const auto& c : level_candidates(j)) {
      Integer sum = 0;
      for (const auto& [lower, count] : table)
        if (admissible_step(lower, c)) sum += count;
      next[c] = sum;
    }
    table = std::move(next);
  }
  ScpCountTable out;
  out.degree = degree;
  out.total = 0;
  for (const auto& [pair, count] : table) out.total += count;
  out.entries = std::move(table);
  return out;
}

SignPattern scp_to_sign_pattern(const Scp& scp) {
  const int d = scp.degree();
  std::string text;
  for (int j = d; j >= 0; --j) text += (scp.level(d - j).pos % 2 == 0) ? '+' : '-';
  return SignPattern::parse(text);
}

Scp truncate(const Scp& scp) {
  if (scp.degree() < 2) throw std::invalid_argument("cannot truncate an SCP of degree < 2");
  auto pairs = scp.pairs();
  return Scp(std::vector<CompatiblePair>(pairs.begin() + 1, pairs.end()));
}

Scp apply_im_scp(const Scp& scp) {
  std::vector<CompatiblePair> swapped;
  for (const auto& p : scp.pairs()) swapped.push_back({p.neg, p.pos});
  return Scp(std::move(swapped));
}

std::vector<Scp> scps_for_couple(const CompatibleCouple& couple) {
  std::vector<Scp> out;
  for (auto& s : enumerate_scps(couple.pattern.degree()))
    if (s.top() == couple.pair && scp_to_sign_pattern(s) == couple.pattern) out.push_back(std::move(s));
  return out;
}

}  // namespace descartes
