#include <doctest.h>

#include "descartes/catalog.hpp"
#include "descartes/realize.hpp"

using namespace descartes;

namespace {

SearchBudget small(std::uint64_t iterations, std::uint64_t seed = 0) {
  SearchBudget b;
  b.max_iterations = iterations;
  b.rng_seed = seed;
  return b;
}

// Re-derives what a witness realizes from the polynomial alone, without
// certify(): root counts, pattern, distinctness.
void independent_check(const Witness& w) {
  const auto pattern = sign_pattern_of(w.poly);
  REQUIRE(pattern.has_value());
  if (auto* c = std::get_if<CompatibleCouple>(&w.target)) {
    CHECK(*pattern == c->pattern);
    const auto counts = signed_root_counts(w.poly);
    CHECK(counts.all_real_distinct);
    CHECK(counts.pos_distinct == c->pair.pos);
    CHECK(counts.neg_distinct == c->pair.neg);
  } else if (auto* s = std::get_if<Scp>(&w.target)) {
    UniPoly q = w.poly;
    for (int j = s->degree(); j >= 1; --j, q = q.derivative()) {
      const auto counts = signed_root_counts(q);
      CHECK(counts.all_real_distinct);
      CHECK(counts.zero_mult == 0);
      CHECK(CompatiblePair{counts.pos_distinct, counts.neg_distinct} == s->level(j));
    }
  }
}

}  // namespace

TEST_CASE("trivial targets") {
  const auto out = realize_couple({SignPattern::parse("++"), {0, 1}}, small(100));
  REQUIRE(out.found());
  CHECK(out.witness->poly == UniPoly::from_highest_first({1, 1}));
  const auto scp = realize_scp(Scp({{1, 0}}), small(100));
  REQUIRE(scp.found());
  CHECK(scp.witness->poly == UniPoly::from_highest_first({1, -1}));
}

TEST_CASE("Descartes' pair is realizable") {
  const CompatibleCouple c{SignPattern::from_blocks({1, 3, 1}), {2, 2}};
  const auto out = realize_couple(c, default_couple_budget());
  REQUIRE(out.found());
  CHECK(verify_witness(*out.witness));
  independent_check(*out.witness);
}

TEST_CASE("a catalogued couple exhausts with diagnostics") {
  const CompatibleCouple c{SignPattern::from_blocks({1, 3, 1}), {0, 2}};
  const auto out = realize_couple(c, small(4000));
  CHECK_FALSE(out.found());
  CHECK(out.iterations == 4000);
  CHECK_FALSE(out.best.description.empty());
  CHECK(out.best.score < 1.0);
}

TEST_CASE("incompatible targets are rejected") {
  CHECK_THROWS_AS(realize_couple({SignPattern::from_blocks({1, 3, 1}), {1, 1}}, small(10)), std::invalid_argument);
  CHECK_THROWS_AS(realize_scp(Scp({{2, 0}, {0, 1}}), small(10)), std::invalid_argument);
  CHECK_THROWS_AS(realize_order(SignPattern::from_blocks({1, 3, 1}), ModuliOrder::parse("PPPN"), small(10)),
                  std::invalid_argument);
}

TEST_CASE("same seed, same witness") {
  const CompatibleCouple c{SignPattern::parse("+-+-+"), {2, 0}};
  const auto a = realize_couple(c, small(5000, 7));
  const auto b = realize_couple(c, small(5000, 7));
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(a.witness->poly == b.witness->poly);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("SCP witnesses at d = 5 re-verify independently") {
  const Scp star({{2, 3}, {1, 3}, {1, 2}, {1, 1}, {1, 0}});
  const auto out = realize_scp(star, default_scp_budget(5));
  REQUIRE(out.found());
  independent_check(*out.witness);
  CHECK(out.witness->certificate.root_counts.size() == 5);
}

TEST_CASE("moduli orders") {
  const auto s131 = SignPattern::from_blocks({1, 3, 1});
  CHECK(canonical_order(s131).str() == "PNNP");
  const auto found = realize_order(s131, ModuliOrder::parse("PNNP"), default_order_budget());
  REQUIRE(found.found());
  CHECK(std::get<ModuliOrder>(moduli_order(found.witness->poly)).str() == "PNNP");
  const auto other = realize_order(s131, ModuliOrder::parse("NNPP"), small(20000));
  CHECK_FALSE(other.found());
}

TEST_CASE("canonical orders and patterns") {
  const auto p = from_change_preservation(ChangePreservationPattern::parse("pcppccc"));
  CHECK(canonical_order(p).str() == "PPPNNPN");
  CHECK(canonical_order(SignPattern::parse("+++")).str() == "NN");
  for (int d = 1; d <= 10; ++d)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << d); ++bits) {
      const auto s = SignPattern::from_bits(d, bits);
      const auto order = canonical_order(s);
      CHECK(order.count('P') == sign_changes(s));
      CHECK(is_canonical_pattern(s) == is_canonical_cp(to_change_preservation(s)));
    }
  CHECK(is_canonical_pattern(SignPattern::from_blocks({1, 3, 1})));
  CHECK(is_canonical_pattern(SignPattern::from_blocks({1, 4, 1})));
  CHECK(is_canonical_pattern(SignPattern::from_blocks({1, 5, 1})));
  CHECK(is_canonical_pattern(SignPattern::from_blocks({4, 1, 2})));
  CHECK_FALSE(is_canonical_pattern(SignPattern::from_blocks({2, 4, 1})));
  CHECK(is_canonical_pattern(SignPattern::parse("+-")));
  CHECK_FALSE(is_canonical_pattern(SignPattern::parse("++--")));
}

TEST_CASE("witnesses transport along their orbit") {
  const CompatibleCouple c{SignPattern::parse("++-+-"), {1, 1}};
  const auto out = realize_couple(c, default_couple_budget());
  REQUIRE(out.found());
  const Witness& w = *out.witness;
  const Witness m = transform_witness(w, Involution::im);
  const Witness r = transform_witness(w, Involution::ir);
  const Witness mr = transform_witness(m, Involution::ir);
  for (const Witness* x : {&m, &r, &mr}) {
    CHECK(verify_witness(*x));
    CHECK(orbit(c).contains(std::get<CompatibleCouple>(x->target)));
  }
  CHECK(std::get<CompatibleCouple>(transform_witness(m, Involution::im).target) == c);
  CHECK(transform_witness(m, Involution::im).poly == w.poly);

  Witness scp_witness = *realize_scp(Scp({{1, 0}}), small(10)).witness;
  CHECK_THROWS_AS(transform_witness(scp_witness, Involution::im), std::invalid_argument);
}

TEST_CASE("parallel streams find witnesses that verify") {
  const CompatibleCouple c{SignPattern::parse("+--+-"), {1, 1}};
  const auto out = realize_streams(c, default_couple_budget(3), 4);
  REQUIRE(out.found());
  CHECK(verify_witness(*out.witness));
}

TEST_CASE("certify rejects what it should") {
  const CompatibleCouple c{SignPattern::parse("+-+"), {2, 0}};
  CHECK(certify(UniPoly::from_highest_first({1, -3, 2}), c).has_value());
  CHECK_FALSE(certify(UniPoly::from_highest_first({1, -2, 1}), c).has_value());  // double root
  CHECK_FALSE(certify(UniPoly::from_highest_first({2, -6, 4}), c).has_value());   // not monic
  CHECK_FALSE(certify(UniPoly::from_highest_first({1, -3, 2}), CompatibleCouple{SignPattern::parse("+-+"), {0, 0}}));
}
