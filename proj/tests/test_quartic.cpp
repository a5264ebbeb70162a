#include <doctest.h>

#include <random>

#include "descartes/quartic.hpp"
#include "descartes/roots.hpp"
#include "descartes/sweeps.hpp"

using namespace descartes;
using namespace descartes::quartic;

namespace {

QuarticPoint from_roots4(std::initializer_list<Rational> roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& r : roots) p = p * UniPoly::linear_root(r);
  return QuarticPoint::from_poly(p);
}

}  // namespace

TEST_CASE("special points") {
  const QuarticPoint t0{-2, -3, 4, 4};
  CHECK(t0.poly() == UniPoly::from_highest_first({1, -2, -3, 4, 4}));
  CHECK(classify(t0) == RegionLabel::Mset);
  CHECK(classify(param_Q4_minus(Rational(1, 2), 1, Rational(1, 16))) == RegionLabel::R01);
  CHECK(classify({0, 0, 0, 1}) == RegionLabel::Other);  // x^4 + 1
  CHECK(param_M(1, 2) == t0);
  CHECK(classify(param_M(1, 2)) == RegionLabel::Mset);
  CHECK(classify(param_Lminus(Rational(1, 2), 1, Rational(1, 5))) == RegionLabel::Lminus);
}

TEST_CASE("generator domains") {
  CHECK_THROWS_AS(param_Q4_plus(Rational(1, 2), 1, 1), std::domain_error);  // b outside (af/4, af - f^2/4)
  CHECK_THROWS_AS(param_Q4_minus(2, 1, Rational(1, 100)), std::domain_error);
  CHECK_THROWS_AS(param_M(2, 1), std::domain_error);
  CHECK_THROWS_AS(param_M(1, 4), std::domain_error);  // 16 - 16 + 1 > 0
  // g = f^2/4 inside the L- interval is the double-double stratum
  CHECK_FALSE(in_domain(Generator::LMinus, {Rational(3, 4), 1, Rational(1, 4)}));
  CHECK(classify(QuarticPoint::from_poly(pow(UniPoly::linear_root(Rational(-3, 8)), 2) *
                                         pow(UniPoly::linear_root(Rational(1, 2)), 2))) == RegionLabel::Mset);
}

TEST_CASE("orthant open regions follow the root counts") {
  // (+,-,-,-,+)
  const auto p = from_roots4({Rational(1, 2), 4, -1, -2});
  REQUIRE(orthant_of(p) == Orthant::Sigma131);
  CHECK(classify(p) == RegionLabel::R0);
  // two positive roots and a complex pair inside the orthant
  const QuarticPoint r1 = QuarticPoint::from_poly(UniPoly::linear_root(Rational(1, 2)) * UniPoly::linear_root(4) *
                                                  UniPoly::from_highest_first({1, 1, 1}));
  REQUIRE(orthant_of(r1) == Orthant::Sigma131);
  CHECK(classify(r1) == RegionLabel::R1);
}

TEST_CASE("discriminant membership") {
  const auto a = discriminant_membership(QuarticPoint::from_poly(pow(UniPoly::linear_root(1), 2) * UniPoly::from_highest_first({1, 1, 1})));
  CHECK(a.kind == DiscriminantKind::OnD4RealDouble);
  CHECK(a.multiple_root_signs == std::vector<int>{1});
  CHECK(a.resultant == 0);
  CHECK(discriminant_membership(QuarticPoint::from_poly(pow(UniPoly::from_highest_first({1, 0, 1}), 2))).kind ==
        DiscriminantKind::OnDelta2ComplexDouble);
  const auto off = discriminant_membership(from_roots4({1, 2, -3, -4}));
  CHECK(off.kind == DiscriminantKind::OffD4);
  CHECK(off.resultant != 0);
}

TEST_CASE("generators are sound on random draws, serially and in parallel") {
  for (const auto& spec : generator_specs()) {
    CAPTURE(spec.name);
    const auto par = generator_soundness(spec.generator, 300, 9, Execution::Parallel);
    const auto ser = generator_soundness(spec.generator, 300, 9, Execution::Serial);
    CHECK(par.mismatches == 0);
    CHECK(ser.mismatches == par.mismatches);
  }
}

TEST_CASE("R1 and R2 points have the stated real roots") {
  std::mt19937_64 rng(31);
  int r1 = 0, r2 = 0;
  for (int i = 0; i < 3000 && (r1 < 50 || r2 < 50); ++i) {
    auto c = [&](int lo, int hi) {
      Rational v(std::uniform_int_distribution<int>(lo, hi)(rng), 8);
      v.canonicalize();
      return v;
    };
    const QuarticPoint q{c(-40, -1), c(-80, -1), c(-40, -1), c(1, 40)};
    const auto label = classify(q);
    const auto counts = signed_root_counts(q.poly());
    if (label == RegionLabel::R1) {
      ++r1;
      CHECK(counts.pos_distinct == 2);
      CHECK(counts.neg_distinct == 0);
    } else if (label == RegionLabel::R0) {
      ++r2;
      CHECK(counts.pos_distinct == 2);
      CHECK(counts.neg_distinct == 2);
    }
  }
  CHECK(r1 > 0);
  CHECK(r2 > 0);
}

TEST_CASE("no opposite-sign double structure in the (+,-,-,-,+) orthant") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto params = sample_params(i % 2 ? Generator::Q4Minus : Generator::Q4Plus, rng);
    const auto q = generate(i % 2 ? Generator::Q4Minus : Generator::Q4Plus, params);
    const auto m = discriminant_membership(q);
    CHECK(m.kind == DiscriminantKind::OnD4RealDouble);
    CHECK(m.multiple_root_signs.size() == 1);
  }
}

TEST_CASE("boundary g = af/4 lands in R0_01") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    auto params = sample_params(Generator::Q4Minus, rng);
    const Rational a = params[0], f = params[1];
    const UniPoly lin = UniPoly::from_highest_first({Rational(1), a / 2});
    const auto q = QuarticPoint::from_poly(lin * lin * UniPoly::from_highest_first({Rational(1), -f, a * f / 4}));
    CHECK(q.b1 == 0);
    CHECK(classify(q) == RegionLabel::R0_01);
  }
}

TEST_CASE("slice grid") {
  SliceSpec spec;
  spec.base = QuarticPoint{-2, 0, 0, 4};
  spec.first = {2, -6, 0, 7};   // b2 in steps of 1: contains -3
  spec.second = {1, 0, 8, 5};   // b1 in steps of 2: contains 4
  const auto rows = slice_grid(spec, Execution::Parallel);
  CHECK(rows.size() == 35);
  CHECK(rows == slice_grid(spec, Execution::Serial));
  bool t0_seen = false;
  for (const auto& r : rows)
    if (r.coord1 == -3 && r.coord2 == 4) t0_seen = r.label == RegionLabel::Mset;
  CHECK(t0_seen);
  const std::string csv = slice_csv(rows);
  CHECK(csv.rfind("coord1,coord2,label\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 36);

  // restricted to the (+,-,-,-,+) orthant only its labels appear
  SliceSpec neg = spec;
  neg.first = {2, -6, Rational(-1, 2), 6};
  neg.second = {1, -8, Rational(-1, 2), 6};
  for (const auto& r : slice_grid(neg)) {
    const auto l = r.label;
    CHECK((l == RegionLabel::R0 || l == RegionLabel::R1 || l == RegionLabel::R2 || l == RegionLabel::R01 ||
           l == RegionLabel::R12 || l == RegionLabel::Other));
  }
  SliceSpec bad = spec;
  bad.first.resolution = 1;
  CHECK_THROWS_AS(slice_grid(bad), std::invalid_argument);
}
