#include "descartes/multisym.hpp"

#include <algorithm>
#include <cmath>

#include "descartes/roots.hpp"

namespace descartes::multisym {

namespace {

const MultiPoly a = MultiPoly::variable(Var::a);
const MultiPoly b = MultiPoly::variable(Var::b);
const MultiPoly f = MultiPoly::variable(Var::f);
const MultiPoly g = MultiPoly::variable(Var::g);
const MultiPoly x = MultiPoly::variable(Var::x);

MultiPoly sq(const MultiPoly& p) { return p * p; }
MultiPoly cube(const MultiPoly& p) { return p * p * p; }

IdentityCheck check(std::string name, std::string statement, const MultiPoly& lhs, const MultiPoly& rhs,
                    bool certified = true) {
  MultiPoly diff = lhs - rhs;
  return {std::move(name), std::move(statement), certified, diff.is_zero(), std::move(diff)};
}

}  // namespace

MultiPoly build_W() { return (x + 1) * (x + a) * (x + b) * (x - f) * (x - g); }

MultiPoly build_M() {
  MultiPoly prim = build_W().antiderivative(Var::x);
  return prim - prim.substitute(Var::x, MultiPoly(-1));
}

MultiPoly M_at_g() { return build_M().substitute(Var::x, g); }

MultiPoly M_diamond() {
  MultiPoly m = build_M();
  return m.substitute(Var::x, g) - m.substitute(Var::x, -b);
}

MultiPoly R_form() {
  return 10 * a * b * f - 5 * a * b * g + 5 * a * f * g - 3 * a * sq(g) + 5 * b * f * g - 3 * b * sq(g) +
         3 * f * sq(g) - 2 * cube(g) + 5 * a * b - 5 * a * f + 4 * a * g - 5 * b * f + 4 * b * g - 4 * f * g +
         3 * sq(g) - 3 * a - 3 * b + 3 * f - 3 * g + 2;
}

MultiPoly M_star_form() {
  return 30 * a * b * f - 20 * a * b * g + 20 * a * f * g - 15 * a * sq(g) + 20 * b * f * g - 15 * b * sq(g) +
         15 * f * sq(g) - 12 * cube(g) + 10 * a * b - 10 * a * f + 10 * a * g - 10 * b * f + 10 * b * g -
         10 * f * g + 9 * sq(g) - 5 * a - 5 * b + 5 * f - 6 * g + 3;
}

MultiPoly neg_M_star_at_g1a_form() {
  return 35 * sq(a) * (b - f) + 27 * cube(a) + 47 * sq(a) - 50 * a * b * f - 10 * f * b + 30 * a * (b - f) +
         34 * a + 10 * (b - f) + 6;
}

MultiPoly dM_star_dg_form() {
  return -20 * a * (b - f) - 30 * a * g + 20 * b * f - 30 * g * (b - f) - 36 * sq(g) + 10 * a + 18 * g - 6 +
         10 * (b - f);
}

MultiPoly M_tilde_factor_form() {
  return 10 * a * b + 5 * a * (g - 1) + 5 * b * (g - 1) + (3 * sq(g) - 4 * g + 3);
}

MultiPoly V_form() {
  return 3 * a * sq(b) + 5 * a * b * f - 4 * a * b * g - 5 * a * f * g + 3 * a * sq(g) - 2 * cube(b) -
         3 * sq(b) * f + 3 * sq(b) * g + 4 * b * f * g - 3 * sq(g) * b - 3 * f * sq(g) + 2 * cube(g) - 5 * a * b -
         10 * f * a + 5 * g * a + 3 * sq(b) + 5 * f * b - 4 * g * b - 5 * g * f + 3 * sq(g);
}

MultiPoly V_at_g1a_fb_form() {
  return 5 * (cube(a - b) + (4 * a - 3 * b) * (a - b) + 4 * a + 1 - 2 * a * b - 3 * b);
}

MultiPoly dV_dg_form() {
  return -4 * a * b - 5 * a * f + 6 * a * g + 3 * sq(b) + 4 * b * f - 6 * b * g - 6 * f * g + 6 * sq(g) +
         5 * a - 4 * b - 5 * f + 6 * g;
}

MultiPoly dV_dg_at_g1a_form() {
  return (12 * sq(a) + 12 - 10 * a * b - 11 * a * f) + 3 * sq(b) + 4 * b * f + (29 * a - 10 * b - 11 * f);
}

MultiPoly d2V_dg2_form() { return 6 * (a - b) + 6 * (1 - f) + 12 * g; }

MultiPoly H_form() {
  return 5 * a * (b - g) - 3 * sq(b) + 4 * b * g - 3 * sq(g) - 10 * a + 5 * (b - g);
}

bool verify_identity(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs == rhs; }

std::vector<IdentityCheck> verify_main_identities() {
  const MultiPoly m = build_M();
  const MultiPoly mg = M_at_g();
  const MultiPoly md = M_diamond();
  std::vector<IdentityCheck> out;
  out.push_back(check("M(-1)=0", "M(-1) = 0", m.substitute(Var::x, MultiPoly(-1)), MultiPoly(0)));
  out.push_back(check("dM/dx=W", "dM/dx = W", m.derivative(Var::x), build_W()));
  out.push_back(check("M(g)", "60*M(g) = (g+1)^3*R", 60 * mg, cube(g + 1) * R_form()));
  out.push_back(check("M(1+a)|f=b", "M(g)|_{g=1+a,f=b} = -(2+a)^3*a*(a^2-3b^2+a+1)/12",
                      mg.substitute(Var::g, 1 + a).substitute(Var::f, b),
                      -cube(2 + a) * a * (sq(a) - 3 * sq(b) + a + 1) * MultiPoly(Rational(1, 12))));
  out.push_back(check("M-diamond", "60*(M(g) - M(-b)) = -(b+g)^3*V", 60 * md, -cube(b + g) * V_form()));
  out.push_back(check("V|g=1+a,f=b", "V|_{g=1+a,f=b} = 5((a-b)^3+(4a-3b)(a-b)+4a+1-2ab-3b)",
                      V_form().substitute(Var::g, 1 + a).substitute(Var::f, b), V_at_g1a_fb_form()));
  return out;
}

std::vector<IdentityCheck> verify_derivative_formulas() {
  const MultiPoly mg = M_at_g();
  const MultiPoly ms = M_star_form();
  const MultiPoly v = V_form();
  const MultiPoly h = H_form();
  const MultiPoly dv_df = v.derivative(Var::f);
  std::vector<IdentityCheck> out;
  out.push_back(check("M-dagger", "60*d/dg[M(g)] = (g+1)^2*M*", 60 * mg.derivative(Var::g), sq(g + 1) * ms));
  out.push_back(check("-M*|g=1+a", "-M*|_{g=1+a} = 35a^2(b-f)+27a^3+47a^2-50abf-10fb+30a(b-f)+34a+10(b-f)+6",
                      -ms.substitute(Var::g, 1 + a), neg_M_star_at_g1a_form()));
  out.push_back(check("dM*/dg", "dM*/dg = -20a(b-f)-30ag+20bf-30g(b-f)-36g^2+10a+18g-6+10(b-f)",
                      ms.derivative(Var::g), dM_star_dg_form()));
  out.push_back(check("M-tilde", "60*d/df[M(g)] = (g+1)^3*(10ab+5a(g-1)+5b(g-1)+(3g^2-4g+3))",
                      60 * mg.derivative(Var::f), cube(g + 1) * M_tilde_factor_form()));
  out.push_back(check("dV/dg", "dV/dg = -4ab-5af+6ag+3b^2+4bf-6bg-6fg+6g^2+5a-4b-5f+6g", v.derivative(Var::g),
                      dV_dg_form()));
  out.push_back(check("dV/dg|g=1+a", "dV/dg|_{g=1+a} = (12a^2+12-10ab-11af)+3b^2+4bf+(29a-10b-11f)",
                      v.derivative(Var::g).substitute(Var::g, 1 + a), dV_dg_at_g1a_form()));
  out.push_back(check("d2V/dg2", "d^2V/dg^2 = 6(a-b)+6(1-f)+12g", v.derivative(Var::g).derivative(Var::g),
                      d2V_dg2_form()));
  // Three readings of the display relating V, f and H.
  out.push_back(check("dV/df=H", "dV/df = H", dv_df, h, false));
  out.push_back(check("dM-diamond/df", "d/df[M(g) - M(-b)] = -(b+g)^3*H/60", M_diamond().derivative(Var::f),
                      -cube(b + g) * h * MultiPoly(Rational(1, 60)), false));
  out.push_back(check("dV/df verbatim", "dV/df = -(b+g)^3*H/60", dv_df,
                      -cube(b + g) * h * MultiPoly(Rational(1, 60)), false));
  return out;
}

std::vector<IdentityCheck> verify_identities() {
  auto out = verify_main_identities();
  auto more = verify_derivative_formulas();
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// ------------------------------------------------------------- sampling

bool ParamPoint::is_admissible() const { return 0 < f && f < b && b < a && a < 1 && g > 1 + a + (b - f); }

bool CriticalLevels::alternates() const {
  const auto& l = levels;
  return l[0] == 0 && l[0] < l[1] && l[1] > l[2] && l[2] < l[3] && l[3] > l[4];
}

namespace {

UniPoly primitive_at(const ParamPoint& p) {
  UniPoly w = from_roots({p.f, p.g}, {Rational(-1), -p.a, -p.b}, {});
  UniPoly prim = w.antiderivative();
  return prim - UniPoly::constant(prim(Rational(-1)));
}

std::array<Rational, 5> levels_of(const UniPoly& m, const ParamPoint& p) {
  return {m(Rational(-1)), m(-p.a), m(-p.b), m(p.f), m(p.g)};
}

bool distinct(const std::array<Rational, 5>& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (l[i] == l[j]) return false;
  return true;
}

}  // namespace

CriticalLevels critical_levels(const ParamPoint& point) {
  if (!point.is_admissible()) throw std::invalid_argument("parameter point is not admissible");
  CriticalLevels out;
  out.levels = levels_of(primitive_at(point), point);
  if (!distinct(out.levels)) throw DegenerateLevels("critical levels are not pairwise distinct");
  return out;
}

ParamPoint sample_param_point(std::mt19937_64& rng) {
  constexpr int kGrid = 4096;
  std::uniform_int_distribution<int> cell(1, kGrid - 1);
  int i, j, k;
  do {
    i = cell(rng);
    j = cell(rng);
    k = cell(rng);
  } while (i == j || j == k || i == k);
  int lo = std::min({i, j, k});
  int hi = std::max({i, j, k});
  int mid = i + j + k - lo - hi;
  ParamPoint p;
  p.f = Rational(lo, kGrid);
  p.b = Rational(mid, kGrid);
  p.a = Rational(hi, kGrid);
  p.f.canonicalize();
  p.b.canonicalize();
  p.a.canonicalize();
  std::uniform_real_distribution<double> expo(-10.0, 6.0);
  Rational delta = snap_to_rational(std::exp2(expo(rng)), 1e-6);
  p.g = 1 + p.a + (p.b - p.f) + delta;
  return p;
}

std::vector<std::string> claim_names() {
  return {"M(g) < 0",
          "M(g) < M(-b)",
          "M*|_{f=b} < 0",
          "H < 0",
          "dV/dg|_{f=b} > 0",
          "d/df M(g) > 0",
          "0 = l1 < l2 > l3 < l4 > l5",
          "l5 < min(l1, l3)"};
}

PointVerdict check_point(const ParamPoint& p) {
  static const MultiPoly m_star = M_star_form();
  static const MultiPoly h = H_form();
  static const MultiPoly dv_dg = dV_dg_form();
  static const MultiPoly m_tilde = M_tilde_factor_form();

  PointVerdict v;
  UniPoly m = primitive_at(p);
  auto levels = levels_of(m, p);
  if (!distinct(levels)) {
    v.degenerate = true;
    return v;
  }
  const std::array<Rational, kVarCount> at{p.a, p.b, p.f, p.g, Rational(0)};
  const std::array<Rational, kVarCount> at_fb{p.a, p.b, p.b, p.g, Rational(0)};
  CriticalLevels cl{levels, Rational(0)};
  v.held = {
      levels[4] < 0,
      levels[4] < levels[2],
      m_star.evaluate(at_fb) < 0,
      h.evaluate(at) < 0,
      dv_dg.evaluate(at_fb) > 0,
      m_tilde.evaluate(at) > 0,
      cl.alternates(),
      levels[4] < std::min(levels[0], levels[2]),
  };
  return v;
}

SignClaimReport check_sign_claims(std::uint64_t samples, std::uint64_t seed, Execution exec) {
  std::vector<ParamPoint> points(samples);
  std::vector<PointVerdict> verdicts(samples);
  const auto n = static_cast<std::int64_t>(samples);
  auto body = [&](std::int64_t i) {
    std::mt19937_64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    points[i] = sample_param_point(rng);
    verdicts[i] = check_point(points[i]);
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }

  SignClaimReport report;
  report.samples = samples;
  for (auto& name : claim_names()) report.claims.push_back({name, 0, 0});
  for (std::uint64_t i = 0; i < samples; ++i) {
    if (verdicts[i].degenerate) {
      ++report.degenerate;
      continue;
    }
    for (std::size_t c = 0; c < report.claims.size(); ++c) {
      ++report.claims[c].checked;
      if (verdicts[i].held[c])
        ++report.claims[c].held;
      else
        report.counterexamples.push_back({i, points[i], report.claims[c].name});
    }
  }
  return report;
}

}  // namespace descartes::multisym
