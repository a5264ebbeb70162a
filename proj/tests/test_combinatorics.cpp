#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "descartes/combinatorics.hpp"

using namespace descartes;

namespace {

std::vector<SignPattern> all_patterns(int d) {
  std::vector<SignPattern> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) out.push_back(SignPattern::from_bits(d, bits));
  return out;
}

// Orbit count by Burnside's lemma: average number of fixed couples over
// the four group elements.
std::size_t burnside_orbits(int d) {
  const auto couples = enumerate_couples(d);
  std::size_t fixed = couples.size();
  for (const auto& c : couples) {
    fixed += apply_im(c) == c;
    fixed += apply_ir(c) == c;
    fixed += apply_im(apply_ir(c)) == c;
  }
  return fixed / 4;
}

}  // namespace

TEST_CASE("patterns parse, print and order") {
  const auto p = SignPattern::parse("+--+");
  CHECK(p.degree() == 3);
  CHECK(p[1] == Sign::Minus);
  CHECK(SignPattern::from_blocks({1, 2, 1}) == p);
  CHECK(p.prefix(1).str() == "+-");
  CHECK(SignPattern::parse("++") < SignPattern::parse("+-"));
  CHECK_THROWS_AS(SignPattern::parse("-+"), std::invalid_argument);
  CHECK_THROWS_AS(SignPattern::parse("+"), std::invalid_argument);
  CHECK_THROWS_AS(SignPattern::parse("+0"), std::invalid_argument);
  CHECK(all_patterns(5).size() == 32);
}

TEST_CASE("Descartes pairs and compatible pairs") {
  const auto s131 = SignPattern::from_blocks({1, 3, 1});
  CHECK(sign_changes(s131) == 2);
  CHECK(descartes_pair(s131) == CompatiblePair{2, 2});
  const std::vector<CompatiblePair> expected{{2, 2}, {2, 0}, {0, 2}, {0, 0}};
  CHECK(compatible_pairs(s131) == expected);
  CHECK(is_compatible(s131, {0, 2}));
  CHECK_FALSE(is_compatible(s131, {1, 1}));
  CHECK_THROWS_AS(make_couple(s131, {1, 1}), std::invalid_argument);
}

TEST_CASE("couple counts match the product formula") {
  const std::size_t frozen[] = {2, 6, 16, 46, 116, 304, 736, 1824};
  for (int d = 1; d <= 8; ++d) {
    std::size_t expected = 0;
    for (const auto& p : all_patterns(d)) {
      const int c = sign_changes(p), q = d - c;
      expected += static_cast<std::size_t>((c / 2 + 1) * (q / 2 + 1));
    }
    CHECK(enumerate_couples(d).size() == expected);
    CHECK(expected == frozen[d - 1]);
  }
}

TEST_CASE("involutions: order two, commuting, im never fixes a pattern") {
  for (int d = 1; d <= 8; ++d)
    for (const auto& p : all_patterns(d)) {
      CHECK(im_pattern(im_pattern(p)) == p);
      CHECK(ir_pattern(ir_pattern(p)) == p);
      CHECK(im_pattern(ir_pattern(p)) == ir_pattern(im_pattern(p)));
      CHECK(im_pattern(p) != p);
      // i_m swaps the Descartes pair, i_r keeps it
      const auto dp = descartes_pair(p);
      CHECK(descartes_pair(im_pattern(p)) == CompatiblePair{dp.neg, dp.pos});
      CHECK(descartes_pair(ir_pattern(p)) == dp);
    }
  const auto s = SignPattern::parse("++-");
  CHECK(im_pattern(s).str() == "+--");
  CHECK(ir_pattern(s).str() == "+--");
  CHECK(apply_im({s, {1, 0}}).pair == CompatiblePair{0, 1});
}

TEST_CASE("orbits have size 2 or 4 and partition the couples") {
  for (int d = 1; d <= 7; ++d) {
    const auto orbits = enumerate_orbits(d);
    std::set<CompatibleCouple> seen;
    for (const auto& o : orbits) {
      CHECK((o.members.size() == 2 || o.members.size() == 4));
      CHECK(std::is_sorted(o.members.begin(), o.members.end()));
      for (const auto& m : o.members) {
        CHECK(seen.insert(m).second);
        CHECK(orbit(m).members == o.members);
      }
    }
    CHECK(seen.size() == enumerate_couples(d).size());
    CHECK(orbits.size() == burnside_orbits(d));
  }
}

TEST_CASE("orbit counts, frozen") {
  const std::size_t frozen[] = {1, 3, 6, 17, 36, 91, 206, 500};
  for (int d = 1; d <= 8; ++d) CHECK(enumerate_orbits(d).size() == frozen[d - 1]);
}

TEST_CASE("non-realizable d = 4 couple has an orbit of size two") {
  const auto o = orbit({SignPattern::from_blocks({1, 3, 1}), {0, 2}});
  REQUIRE(o.members.size() == 2);
  CHECK(o.contains({SignPattern::parse("++-++"), {2, 0}}));
}

TEST_CASE("change-preservation form") {
  const auto cp = to_change_preservation(SignPattern::from_blocks({1, 3, 1}));
  CHECK(cp.str() == "cppc");
  CHECK(cp.count('c') == 2);
  for (int d = 1; d <= 8; ++d)
    for (const auto& p : all_patterns(d)) {
      const auto w = to_change_preservation(p);
      CHECK(w.length() == d);
      CHECK(w.count('c') == sign_changes(p));
      CHECK(from_change_preservation(w) == p);
    }
  CHECK_THROWS_AS(ChangePreservationPattern::parse("cx"), std::invalid_argument);
}
