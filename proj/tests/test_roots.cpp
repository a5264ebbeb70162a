#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "descartes/roots.hpp"
#include "test_helpers.hpp"

using namespace descartes;

namespace {

UniPoly with_roots(std::initializer_list<Rational> roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& r : roots) p = p * UniPoly::linear_root(r);
  return p;
}

}  // namespace

TEST_CASE("Sturm counts on intervals, endpoints excluded") {
  const UniPoly p = with_roots({1, 2, Rational(3, 2), -1});
  SturmSequence s(p);
  CHECK(s.count(OpenInterval::whole_line()) == 4);
  CHECK(s.count(OpenInterval::positive()) == 3);
  CHECK(s.count(OpenInterval::negative()) == 1);
  CHECK(s.count({Rational(1), Rational(2)}) == 1);
  CHECK(s.count({Rational(0), Rational(1)}) == 0);
  CHECK(s.count({Rational(1), std::nullopt}) == 2);
  CHECK(count_roots_in(p * p, {Rational(-2), Rational(5)}) == 4);  // distinct roots
}

TEST_CASE("Sturm counts match constructed roots") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::set<Rational> roots;
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    while (static_cast<int>(roots.size()) < n) {
      Rational r = testing::small_rational(rng);
      r.canonicalize();
      roots.insert(r);
    }
    UniPoly p = UniPoly::constant(1);
    for (const auto& r : roots) p = p * UniPoly::linear_root(r);
    p = p * UniPoly::from_highest_first({1, 0, Rational(std::uniform_int_distribution<int>(1, 9)(rng))});
    const Rational lo = testing::small_rational(rng), hi = lo + Rational(std::uniform_int_distribution<int>(1, 8)(rng), 3);
    const auto expected = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return lo < r && r < hi; });
    CHECK(count_roots_in(p, {lo, hi}) == expected);
  }
}

TEST_CASE("square-free decomposition reconstructs the polynomial") {
  const UniPoly p = pow(with_roots({1}), 3) * pow(with_roots({-2}), 2) * UniPoly::from_highest_first({1, 0, 1});
  const auto parts = squarefree_decomposition(p);
  UniPoly product = UniPoly::constant(1);
  for (const auto& [f, m] : parts) {
    CHECK(gcd(f, f.derivative()).degree() == 0);
    product = product * pow(f, m);
  }
  CHECK(product == p);
  CHECK(squarefree_part(p) == with_roots({1, -2}) * UniPoly::from_highest_first({1, 0, 1}));

  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const UniPoly a = testing::random_poly(rng, 2), b = testing::random_poly(rng, 3);
    const UniPoly q = a * a * a * b;
    UniPoly back = UniPoly::constant(q.leading());
    for (const auto& [f, m] : squarefree_decomposition(q)) back = back * pow(f, m);
    CHECK(back == q);
  }
}

TEST_CASE("signed root counts") {
  const auto c = signed_root_counts(pow(with_roots({2}), 2) * with_roots({-1, 3, 0}) * UniPoly::from_highest_first({1, 1, 1}));
  CHECK(c.pos_with_mult == 3);
  CHECK(c.pos_distinct == 2);
  CHECK(c.neg_with_mult == 1);
  CHECK(c.zero_mult == 1);
  CHECK(c.complex_pairs == 1);
  CHECK_FALSE(c.all_real_distinct);
}

TEST_CASE("from_roots validates and expands") {
  const UniPoly p = from_roots({Rational(1)}, {Rational(-2)}, {{Rational(0), Rational(1)}});
  CHECK(p == with_roots({1, -2}) * UniPoly::from_highest_first({1, 0, 1}));
  CHECK_THROWS_AS(from_roots({Rational(-1)}, {}, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_roots({}, {Rational(1)}, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_roots({}, {}, {{Rational(2), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("resultant equals the product of g over the roots of monic f") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> roots;
    UniPoly f = UniPoly::constant(1);
    for (int k = std::uniform_int_distribution<int>(1, 4)(rng); k > 0; --k) {
      roots.push_back(testing::small_rational(rng));
      f = f * UniPoly::linear_root(roots.back());
    }
    const UniPoly g = testing::random_poly(rng, std::uniform_int_distribution<int>(1, 4)(rng));
    Rational expected = 1;
    for (const auto& r : roots) expected *= g(r);
    CHECK(sylvester_resultant(f, g) == expected);
  }
  CHECK(sylvester_resultant(with_roots({1, 1}), with_roots({1, 1}).derivative()) == 0);
}

TEST_CASE("isolating intervals separate the real roots") {
  const UniPoly p = with_roots({Rational(1, 3), Rational(1, 2), -5, 7}) * UniPoly::from_highest_first({1, 0, 2});
  const auto iv = isolate_real_roots(p);
  REQUIRE(iv.size() == 4);
  const Rational roots[] = {-5, Rational(1, 3), Rational(1, 2), 7};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(iv[i].lo <= roots[i]);
    CHECK(roots[i] <= iv[i].hi);
    const auto r = refine_root(p, iv[i], Rational(1, 1000));
    CHECK(r.hi - r.lo <= Rational(1, 1000));
    CHECK(r.lo <= roots[i]);
    CHECK(roots[i] <= r.hi);
  }
  for (std::size_t i = 1; i < iv.size(); ++i) CHECK(iv[i - 1].hi <= iv[i].lo);
}

TEST_CASE("moduli orders") {
  auto order = [](const UniPoly& p) { return moduli_order(p); };
  CHECK(std::get<ModuliOrder>(order(with_roots({1, -2, 3}))).str() == "PNP");
  CHECK(std::get<ModuliOrder>(order(with_roots({Rational(-1, 2), 1, Rational(3, 2), -4}))).str() == "NPPN");
  CHECK(std::get<OrderFailure>(order(with_roots({1, -1}))) == OrderFailure::EqualModuli);
  CHECK(std::get<OrderFailure>(order(UniPoly::from_highest_first({1, 0, 1}))) == OrderFailure::NotHyperbolic);
  CHECK(std::get<OrderFailure>(order(with_roots({1, 1}))) == OrderFailure::NotHyperbolic);
  CHECK(std::get<OrderFailure>(order(with_roots({0, 1}))) == OrderFailure::NotHyperbolic);
  CHECK(ModuliOrder::parse("PNNP").count('N') == 2);
  CHECK_THROWS_AS(ModuliOrder::parse("PX"), std::invalid_argument);
}

TEST_CASE("derivative chains") {
  CHECK(std::get<Scp>(derivative_chain_scp(with_roots({1}))) == Scp({{1, 0}}));
  // P' = 3x^2 - 14x + 14 has two positive roots, P'' = 6x - 14 one
  CHECK(std::get<Scp>(derivative_chain_scp(with_roots({1, 2, 4}))) == Scp({{3, 0}, {2, 0}, {1, 0}}));
  // x^3 - 7x + 6: P'' = 6x vanishes at 0
  const auto zero = std::get<ChainFailure>(derivative_chain_scp(with_roots({1, 2, -3})));
  CHECK(zero.kind == ChainFailure::Kind::ZeroRoot);
  CHECK(zero.level == 1);
  const auto multiple = std::get<ChainFailure>(derivative_chain_scp(with_roots({1, 1, -1})));
  CHECK(multiple.kind == ChainFailure::Kind::MultipleRealRoot);
  CHECK(multiple.level == 3);
}

TEST_CASE("sign_pattern_of") {
  CHECK(sign_pattern_of(with_roots({1, 2}))->str() == "+-+");
  CHECK_FALSE(sign_pattern_of(with_roots({1, -1})).has_value());
  CHECK(sign_pattern_of(UniPoly::from_highest_first({2, 1}))->str() == "++");
  CHECK_FALSE(sign_pattern_of(UniPoly::from_highest_first({-1, 1})).has_value());
}
