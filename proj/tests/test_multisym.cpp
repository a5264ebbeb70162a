#include <doctest.h>

#include <random>

#include "descartes/multisym.hpp"
#include "descartes/roots.hpp"

using namespace descartes;
using namespace descartes::multisym;

namespace {

// Univariate route: the primitive of (x+1)(x+a)(x+b)(x-f)(x-g) vanishing
// at -1, built with UniPoly only.
Rational m_univariate(const Rational& a, const Rational& b, const Rational& f, const Rational& g, const Rational& t) {
  const UniPoly w = UniPoly::linear_root(-1) * UniPoly::linear_root(-a) * UniPoly::linear_root(-b) *
                    UniPoly::linear_root(f) * UniPoly::linear_root(g);
  const UniPoly prim = w.antiderivative();
  return prim(t) - prim(Rational(-1));
}

Rational at(const MultiPoly& p, const Rational& a, const Rational& b, const Rational& f, const Rational& g) {
  return p.evaluate({a, b, f, g, Rational(0)});
}

UniPoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  UniPoly out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    UniPoly basis = UniPoly::constant(values[i]);
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != i) basis = basis * UniPoly::linear_root(nodes[j]) * Rational(1 / (nodes[i] - nodes[j]));
    out = out + basis;
  }
  return out;
}

struct Point {
  Rational a, b, f, g;
};

std::vector<Point> random_points(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto r = [&] {
    return Rational(std::uniform_int_distribution<int>(-30, 30)(rng), std::uniform_int_distribution<int>(1, 7)(rng));
  };
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) {
    Point p{r(), r(), r(), r()};
    p.a.canonicalize();
    p.b.canonicalize();
    p.f.canonicalize();
    p.g.canonicalize();
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("every certified identity holds") {
  for (const auto& c : verify_identities()) {
    CAPTURE(c.name);
    if (c.certified) CHECK(c.holds);
  }
}

TEST_CASE("the dV/df readings resolve one way") {
  std::map<std::string, bool> probe;
  for (const auto& c : verify_derivative_formulas())
    if (!c.certified) probe[c.name] = c.holds;
  CHECK(probe.at("dV/df=H"));
  CHECK(probe.at("dM-diamond/df"));
  CHECK_FALSE(probe.at("dV/df verbatim"));
}

TEST_CASE("closed forms agree with the univariate primitive at random points") {
  for (const auto& [a, b, f, g] : random_points(40, 21)) {
    const Rational mg = m_univariate(a, b, f, g, g);
    const Rational mb = m_univariate(a, b, f, g, -b);
    CHECK(60 * mg == (g + 1) * (g + 1) * (g + 1) * at(R_form(), a, b, f, g));
    if (b + g != 0) CHECK(60 * (mg - mb) == -(b + g) * (b + g) * (b + g) * at(V_form(), a, b, f, g));
    CHECK(at(M_at_g(), a, b, f, g) == mg);
    const Rational m1a = m_univariate(a, b, b, 1 + a, 1 + a);
    CHECK(m1a == -(2 + a) * (2 + a) * (2 + a) * a * (a * a - 3 * b * b + a + 1) / 12);
  }
}

TEST_CASE("derivative formulas agree with interpolation and exact differences") {
  for (const auto& [a, b, f, g] : random_points(10, 22)) {
    // M(g) has degree <= 7 in g: interpolate on 9 nodes and differentiate.
    std::vector<Rational> nodes, values;
    for (int i = 0; i < 9; ++i) {
      nodes.emplace_back(i - 4, 3);
      nodes.back().canonicalize();
      values.push_back(m_univariate(a, b, f, nodes.back(), nodes.back()));
    }
    const UniPoly mg = interpolate(nodes, values);
    CHECK(60 * mg.derivative()(g) == (g + 1) * (g + 1) * at(M_star_form(), a, b, f, g));

    // M and V are affine in f, so d/df is an exact difference.
    const Rational dm_df = m_univariate(a, b, 1, g, g) - m_univariate(a, b, 0, g, g);
    CHECK(60 * dm_df == (g + 1) * (g + 1) * (g + 1) * at(M_tilde_factor_form(), a, b, f, g));
    const Rational dv_df = at(V_form(), a, b, 1, g) - at(V_form(), a, b, 0, g);
    CHECK(dv_df == at(H_form(), a, b, f, g));
  }
}

TEST_CASE("admissible points and critical levels") {
  const ParamPoint p{Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(2)};
  CHECK(p.is_admissible());
  const auto levels = critical_levels(p);
  CHECK(levels.levels[0] == 0);
  CHECK(levels.alternates());
  const auto verdict = check_point(p);
  CHECK_FALSE(verdict.degenerate);
  for (bool held : verdict.held) CHECK(held);
  CHECK_FALSE(ParamPoint{Rational(1, 4), Rational(1, 2), Rational(1, 8), Rational(2)}.is_admissible());
  CHECK_THROWS_AS(critical_levels({Rational(1, 4), Rational(1, 2), Rational(1, 8), Rational(2)}), std::invalid_argument);
}

TEST_CASE("critical levels are the primitive at the roots of W") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const ParamPoint p = sample_param_point(rng);
    REQUIRE(p.is_admissible());
    const auto levels = critical_levels(p);
    const Rational xi[] = {-1, -p.a, -p.b, p.f, p.g};
    for (int j = 0; j < 5; ++j) CHECK(levels.levels[j] == m_univariate(p.a, p.b, p.f, p.g, xi[j]));
  }
}

TEST_CASE("sign claim sampling is identical serially and in parallel") {
  const auto serial = check_sign_claims(300, 5, Execution::Serial);
  const auto parallel = check_sign_claims(300, 5, Execution::Parallel);
  REQUIRE(serial.claims.size() == parallel.claims.size());
  for (std::size_t i = 0; i < serial.claims.size(); ++i) {
    CHECK(serial.claims[i].checked == parallel.claims[i].checked);
    CHECK(serial.claims[i].held == parallel.claims[i].held);
  }
  CHECK(serial.all_hold());
  CHECK(serial.claims.size() == claim_names().size());
}
