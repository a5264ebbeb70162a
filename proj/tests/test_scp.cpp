#include <doctest.h>

#include <map>
#include <set>

#include "descartes/scp.hpp"

using namespace descartes;

namespace {

// The counting recurrence in its printed form: E_d(m,n) sums E_{d-1} over
// (m-1+mu, n-1+nu), mu, nu >= 0, with the parity of d-1.
std::map<CompatiblePair, Integer> printed_recurrence(int d) {
  std::map<CompatiblePair, Integer> e{{{1, 0}, 1}, {{0, 1}, 1}};
  for (int k = 2; k <= d; ++k) {
    std::map<CompatiblePair, Integer> next;
    for (int m = 0; m <= k; ++m)
      for (int n = 0; m + n <= k; ++n) {
        if ((k - m - n) % 2) continue;
        Integer sum = 0;
        for (const auto& [pair, count] : e)
          if (pair.pos >= m - 1 && pair.neg >= n - 1) sum += count;
        if (sum != 0) next[{m, n}] = sum;
      }
    e = std::move(next);
  }
  return e;
}

}  // namespace

TEST_CASE("SCP counts: recurrence, enumeration and the printed recurrence agree") {
  for (int d = 1; d <= 7; ++d) {
    const auto table = count_scps(d);
    const auto listed = enumerate_scps(d);
    CHECK(table.total == Integer(static_cast<unsigned long>(listed.size())));
    CHECK(table.entries == printed_recurrence(d));
    std::map<CompatiblePair, Integer> by_top;
    for (const auto& s : listed) by_top[s.top()] += 1;
    CHECK(by_top == table.entries);
  }
}

TEST_CASE("SCP totals, frozen") {
  const long frozen[] = {2, 6, 20, 82, 340, 1612, 7500, 38720};
  for (int d = 1; d <= 8; ++d) CHECK(count_scps(d).total == frozen[d - 1]);
}

TEST_CASE("E_2 and E_6 tables") {
  const auto e2 = count_scps(2).entries;
  CHECK(e2.at({2, 0}) == 1);
  CHECK(e2.at({0, 2}) == 1);
  CHECK(e2.at({1, 1}) == 2);
  CHECK(e2.at({0, 0}) == 2);
  const std::map<CompatiblePair, Integer> e6{
      {{0, 0}, 340}, {{0, 2}, 233}, {{0, 4}, 40}, {{0, 6}, 1}, {{1, 1}, 340}, {{1, 3}, 98},
      {{1, 5}, 6},   {{2, 0}, 233}, {{2, 2}, 126}, {{2, 4}, 15}, {{3, 1}, 98},  {{3, 3}, 20},
      {{4, 0}, 40},  {{4, 2}, 15},  {{5, 1}, 6},   {{6, 0}, 1}};
  CHECK(count_scps(6).entries == e6);
}

TEST_CASE("validity") {
  CHECK(is_valid_scp(Scp({{0, 2}, {1, 2}, {1, 1}, {1, 0}})));
  CHECK_FALSE(is_valid_scp(Scp({{2, 0}, {0, 1}})));     // p_2 > p_1 + 1
  CHECK_FALSE(is_valid_scp(Scp({{1, 1}, {1, 1}})));     // level 1 must be (1,0) or (0,1)
  CHECK_FALSE(is_valid_scp(Scp({{1, 0}, {1, 0}})));     // parity at level 2
  CHECK_FALSE(is_valid_scp(Scp({{2, 2}, {0, 3}, {0, 2}, {0, 1}})));  // p_4 > p_3 + 1
  CHECK_FALSE(is_valid_scp(Scp()));
  CHECK(admissible_step({1, 0}, {1, 1}));
  CHECK_FALSE(admissible_step({1, 0}, {2, 1}));
}

TEST_CASE("induced sign pattern") {
  CHECK(scp_to_sign_pattern(Scp({{0, 2}, {1, 2}, {1, 1}, {1, 0}})).str() == "+---+");
  // one pattern, several SCPs
  CHECK(scp_to_sign_pattern(Scp({{0, 1}, {2, 0}, {1, 0}})).str() == "+-++");
  CHECK(scp_to_sign_pattern(Scp({{0, 1}, {0, 0}, {1, 0}})).str() == "+-++");
}

TEST_CASE("every SCP's pairs are compatible with the induced prefix patterns") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& s : enumerate_scps(d)) {
      const auto pattern = scp_to_sign_pattern(s);
      for (int j = 1; j <= d; ++j) CHECK(is_compatible(pattern.prefix(j), s.level(j)));
    }
}

TEST_CASE("truncation and i_m") {
  const Scp s({{0, 2}, {1, 2}, {1, 1}, {1, 0}});
  CHECK(truncate(s) == Scp({{1, 2}, {1, 1}, {1, 0}}));
  CHECK_THROWS_AS(truncate(Scp({{1, 0}})), std::invalid_argument);
  CHECK(apply_im_scp(s) == Scp({{2, 0}, {2, 1}, {1, 1}, {0, 1}}));
  for (int d = 1; d <= 6; ++d) {
    const auto all = enumerate_scps(d);
    const std::set<Scp> set(all.begin(), all.end());
    for (const auto& x : all) {
      CHECK(set.count(apply_im_scp(x)) == 1);
      CHECK(apply_im_scp(apply_im_scp(x)) == x);
      CHECK(scp_to_sign_pattern(apply_im_scp(x)) == im_pattern(scp_to_sign_pattern(x)));
      if (d > 1) CHECK(is_valid_scp(truncate(x)));
    }
  }
}

TEST_CASE("a non-realizable d = 4 couple carries exactly one SCP") {
  const auto s = scps_for_couple({SignPattern::from_blocks({1, 3, 1}), {0, 2}});
  REQUIRE(s.size() == 1);
  CHECK(s.front() == Scp({{0, 2}, {1, 2}, {1, 1}, {1, 0}}));
  const auto t = scps_for_couple({SignPattern::from_blocks({1, 4, 1}), {0, 3}});
  REQUIRE(t.size() == 1);
  CHECK(t.front() == Scp({{0, 3}, {1, 3}, {1, 2}, {1, 1}, {1, 0}}));
}
