#include "descartes/quartic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "descartes/roots.hpp"

namespace descartes::quartic {

UniPoly QuarticPoint::poly() const { return UniPoly(std::vector<Rational>{b0, b1, b2, b3, Rational(1)}); }

QuarticPoint QuarticPoint::from_poly(const UniPoly& p) {
  if (p.degree() != 4 || p.leading() != 1) throw std::invalid_argument("expected a monic quartic");
  return {p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)};
}

const Rational& QuarticPoint::coeff(int j) const {
  switch (j) {
    case 0: return b0;
    case 1: return b1;
    case 2: return b2;
    case 3: return b3;
  }
  throw std::out_of_range("quartic coefficient index must be 0..3");
}

Rational& QuarticPoint::coeff(int j) { return const_cast<Rational&>(std::as_const(*this).coeff(j)); }

std::string to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::R0: return "R0";
    case RegionLabel::R1: return "R1";
    case RegionLabel::R2: return "R2";
    case RegionLabel::R01: return "R01";
    case RegionLabel::R12: return "R12";
    case RegionLabel::Rd0: return "Rd0";
    case RegionLabel::Rd1plus: return "Rd1plus";
    case RegionLabel::Rd1minus: return "Rd1minus";
    case RegionLabel::Rd2: return "Rd2";
    case RegionLabel::Lplus: return "Lplus";
    case RegionLabel::Lminus: return "Lminus";
    case RegionLabel::Mset: return "Mset";
    case RegionLabel::R0_01: return "R0_01";
    case RegionLabel::R0_12: return "R0_12";
    case RegionLabel::Other: return "Other";
  }
  return "Other";
}

Orthant orthant_of(const QuarticPoint& q) {
  if (sgn(q.b3) >= 0 || sgn(q.b2) >= 0 || sgn(q.b0) <= 0) return Orthant::None;
  const int s1 = sgn(q.b1);
  return s1 < 0 ? Orthant::Sigma131 : s1 > 0 ? Orthant::Sigma122 : Orthant::Boundary;
}

namespace {

std::vector<int> real_root_signs(const UniPoly& p) {
  const SignedRootCount c = signed_root_counts(p);
  std::vector<int> out(static_cast<std::size_t>(c.neg_distinct), -1);
  if (c.zero_mult > 0) out.push_back(0);
  out.insert(out.end(), static_cast<std::size_t>(c.pos_distinct), 1);
  return out;
}

RegionLabel classify_simple(Orthant o, const SignedRootCount& c) {
  switch (o) {
    case Orthant::Sigma131:
      return c.complex_pairs == 0 ? RegionLabel::R0 : c.complex_pairs == 1 ? RegionLabel::R1 : RegionLabel::R2;
    case Orthant::Sigma122:
      if (c.complex_pairs == 0) return RegionLabel::Rd0;
      if (c.complex_pairs == 2) return RegionLabel::Rd2;
      return c.pos_distinct == 2 ? RegionLabel::Rd1plus : RegionLabel::Rd1minus;
    default: return RegionLabel::Other;
  }
}

}  // namespace

DiscriminantMembership discriminant_membership(const QuarticPoint& q) {
  const UniPoly p = q.poly();
  DiscriminantMembership out;
  out.resultant = sylvester_resultant(p, p.derivative());
  if (out.resultant != 0) return out;
  const UniPoly g = gcd(p, p.derivative());
  out.multiple_root_signs = real_root_signs(g);
  out.kind = out.multiple_root_signs.empty() ? DiscriminantKind::OnDelta2ComplexDouble : DiscriminantKind::OnD4RealDouble;
  return out;
}

RegionLabel classify(const QuarticPoint& q) {
  const Orthant o = orthant_of(q);
  if (o == Orthant::None) return RegionLabel::Other;
  const UniPoly p = q.poly();
  const UniPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return classify_simple(o, signed_root_counts(p));

  const std::vector<int> signs = real_root_signs(g);
  if (g.degree() == 2) {
    const bool opposite = signs.size() == 2 && signs[0] == -1 && signs[1] == 1;
    return o == Orthant::Sigma122 && opposite ? RegionLabel::Mset : RegionLabel::Other;
  }
  if (g.degree() != 1 || signs.size() != 1) return RegionLabel::Other;

  // One double real root; the cofactor is a quadratic with simple roots.
  const int s = signs.front();
  const UniPoly cofactor = p / (g * g);
  const SignedRootCount c = signed_root_counts(cofactor);
  switch (o) {
    case Orthant::Sigma131:
      if (s < 0 && c.pos_distinct == 2) return RegionLabel::R01;
      if (s > 0 && c.complex_pairs == 1) return RegionLabel::R12;
      return RegionLabel::Other;
    case Orthant::Sigma122: return s > 0 ? RegionLabel::Lplus : RegionLabel::Lminus;
    case Orthant::Boundary:
      if (s < 0) return RegionLabel::R0_01;
      if (s > 0) return RegionLabel::R0_12;
      return RegionLabel::Other;
    default: return RegionLabel::Other;
  }
}

// ---------------------------------------------------------- generators

const std::vector<ParamRegionSpec>& generator_specs() {
  static const std::vector<ParamRegionSpec> specs{
      {Generator::Q4Minus, "Q4_minus", {"a", "f", "g"}, {"0 < a", "a < f", "0 < g", "g < f^2/4", "g < af/4"},
       RegionLabel::R01},
      {Generator::Q4Plus, "Q4_plus", {"a", "f", "b"}, {"0 < f", "f/3 < a", "a < f", "af/4 < b", "b < af - f^2/4"},
       RegionLabel::R12},
      {Generator::LMinus, "L_minus", {"a", "f", "g"},
       {"0 < a", "a < f", "af/4 < g", "g < af - a^2/4", "g != f^2/4"}, RegionLabel::Lminus},
      {Generator::LPlus, "L_plus", {"a", "f", "b"},
       {"f/4 < a", "a < f", "0 < b", "b < af - f^2/4", "b < af/4", "b != a^2/4"}, RegionLabel::Lplus},
      {Generator::M, "M", {"r", "h"}, {"0 < r", "r < h", "h^2 - 4rh + r^2 < 0"}, RegionLabel::Mset},
  };
  return specs;
}

const ParamRegionSpec& spec_of(Generator g) { return generator_specs().at(static_cast<std::size_t>(g)); }

bool in_domain(Generator g, const std::vector<Rational>& p) {
  const std::size_t arity = spec_of(g).parameters.size();
  if (p.size() != arity) return false;
  switch (g) {
    case Generator::Q4Minus: {
      const auto &a = p[0], &f = p[1], &gg = p[2];
      return 0 < a && a < f && 0 < gg && gg < f * f / 4 && gg < a * f / 4;
    }
    case Generator::Q4Plus: {
      const auto &a = p[0], &f = p[1], &b = p[2];
      return 0 < f && f / 3 < a && a < f && a * f / 4 < b && b < a * f - f * f / 4;
    }
    case Generator::LMinus: {
      const auto &a = p[0], &f = p[1], &gg = p[2];
      return 0 < a && a < f && a * f / 4 < gg && gg < a * f - a * a / 4 && gg != f * f / 4;
    }
    case Generator::LPlus: {
      const auto &a = p[0], &f = p[1], &b = p[2];
      return f / 4 < a && a < f && 0 < b && b < a * f - f * f / 4 && b < a * f / 4 && b != a * a / 4;
    }
    case Generator::M: {
      const auto &r = p[0], &h = p[1];
      return 0 < r && r < h && h * h - 4 * r * h + r * r < 0;
    }
  }
  return false;
}

namespace {

UniPoly quad(const Rational& c1, const Rational& c0) {
  return UniPoly(std::vector<Rational>{c0, c1, Rational(1)});
}

UniPoly build(Generator g, const std::vector<Rational>& p) {
  switch (g) {
    case Generator::Q4Minus:
    case Generator::LMinus: {
      UniPoly lin = UniPoly(std::vector<Rational>{p[0] / 2, Rational(1)});
      return lin * lin * quad(-p[1], p[2]);
    }
    case Generator::Q4Plus:
    case Generator::LPlus: {
      UniPoly lin = UniPoly(std::vector<Rational>{-p[1] / 2, Rational(1)});
      return lin * lin * quad(p[0], p[2]);
    }
    case Generator::M: {
      UniPoly neg = UniPoly::linear_root(-p[0]);
      UniPoly pos = UniPoly::linear_root(p[1]);
      return pos * pos * neg * neg;
    }
  }
  throw std::logic_error("unknown generator");
}

}  // namespace

QuarticPoint generate(Generator g, const std::vector<Rational>& params) {
  if (!in_domain(g, params)) throw std::domain_error("parameters outside the domain of " + spec_of(g).name);
  return QuarticPoint::from_poly(build(g, params));
}

QuarticPoint param_Q4_minus(const Rational& a, const Rational& f, const Rational& g) {
  return generate(Generator::Q4Minus, {a, f, g});
}
QuarticPoint param_Q4_plus(const Rational& a, const Rational& f, const Rational& b) {
  return generate(Generator::Q4Plus, {a, f, b});
}
QuarticPoint param_Lminus(const Rational& a, const Rational& f, const Rational& g) {
  return generate(Generator::LMinus, {a, f, g});
}
QuarticPoint param_Lplus(const Rational& a, const Rational& f, const Rational& b) {
  return generate(Generator::LPlus, {a, f, b});
}
QuarticPoint param_M(const Rational& r, const Rational& h) { return generate(Generator::M, {r, h}); }

std::vector<Rational> sample_params(Generator g, std::mt19937_64& rng) {
  // positive values k/64 and open-unit fractions k/1024
  auto dyadic = [&](int lo, int hi, int den) {
    Rational v(std::uniform_int_distribution<int>(lo, hi)(rng), den);
    v.canonicalize();
    return v;
  };
  auto positive = [&] { return dyadic(1, 256, 64); };
  auto unit = [&] { return dyadic(1, 1023, 1024); };
  for (;;) {
    std::vector<Rational> p;
    switch (g) {
      case Generator::Q4Minus: {
        Rational a = positive(), f = a + positive();
        p = {a, f, std::min<Rational>(f * f / 4, a * f / 4) * unit()};
        break;
      }
      case Generator::Q4Plus: {
        Rational f = positive(), a = f / 3 + 2 * f / 3 * unit();
        Rational lo = a * f / 4, hi = a * f - f * f / 4;
        p = {a, f, lo + (hi - lo) * unit()};
        break;
      }
      case Generator::LMinus: {
        Rational a = positive(), f = a + positive();
        Rational lo = a * f / 4, hi = a * f - a * a / 4;
        p = {a, f, lo + (hi - lo) * unit()};
        break;
      }
      case Generator::LPlus: {
        Rational f = positive(), a = f / 4 + 3 * f / 4 * unit();
        p = {a, f, std::min<Rational>(a * f - f * f / 4, a * f / 4) * unit()};
        break;
      }
      case Generator::M: {
        Rational r = positive();
        p = {r, r * (1 + Rational(27, 10) * unit())};
        break;
      }
    }
    for (auto& v : p) v.canonicalize();
    if (in_domain(g, p)) return p;
  }
}

// --------------------------------------------------------------- slices

std::vector<SliceRow> slice_grid(const SliceSpec& spec, Execution exec) {
  for (const SliceAxis* ax : {&spec.first, &spec.second})
    if (ax->coeff < 0 || ax->coeff > 3 || ax->resolution < 2 || !(ax->lo < ax->hi))
      throw std::invalid_argument("slice axis needs a coefficient 0..3, lo < hi and resolution >= 2");
  if (spec.first.coeff == spec.second.coeff) throw std::invalid_argument("slice axes must differ");

  auto node = [](const SliceAxis& ax, int i) {
    Rational t(i, ax.resolution - 1);
    t.canonicalize();
    return Rational(ax.lo + (ax.hi - ax.lo) * t);
  };
  const int n1 = spec.first.resolution, n2 = spec.second.resolution;
  std::vector<SliceRow> rows(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2));
  auto fill_row = [&](int i) {
    for (int j = 0; j < n2; ++j) {
      QuarticPoint q = spec.base;
      q.coeff(spec.first.coeff) = node(spec.first, i);
      q.coeff(spec.second.coeff) = node(spec.second, j);
      rows[static_cast<std::size_t>(i) * n2 + j] = {q.coeff(spec.first.coeff), q.coeff(spec.second.coeff), classify(q)};
    }
  };
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < n1; ++i) fill_row(i);
  } else {
    for (int i = 0; i < n1; ++i) fill_row(i);
  }
  return rows;
}

std::string slice_csv(const std::vector<SliceRow>& rows) {
  std::ostringstream os;
  os << "coord1,coord2,label\n";
  for (const auto& r : rows) os << descartes::to_string(r.coord1) << "," << descartes::to_string(r.coord2) << "," << to_string(r.label) << "\n";
  return os.str();
}

}  // namespace descartes::quartic
