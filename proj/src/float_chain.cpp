#include "float_chain.hpp"

#include <algorithm>
#include <cmath>

namespace descartes::detail {

double horner(std::span<const double> c, double x) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

double cauchy_bound(std::span<const double> c) {
  double lead = c.back();
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) m = std::max(m, std::abs(c[k] / lead));
  return 1.0 + m;
}

double bisect(std::span<const double> c, double lo, double hi, double f_lo) {
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double f_mid = horner(c, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0) == (f_lo < 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<double> roots_from_critical(std::span<const double> c, std::span<const double> critical) {
  std::vector<double> out;
  const double bound = cauchy_bound(c);
  std::vector<double> pts;
  pts.push_back(-bound);
  for (double x : critical)
    if (x > -bound && x < bound) pts.push_back(x);
  pts.push_back(bound);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double f_lo = horner(c, pts[i]);
    double f_hi = horner(c, pts[i + 1]);
    if (f_lo == 0.0) {
      if (i == 0) continue;
      out.push_back(pts[i]);
      continue;
    }
    if (sign_of(f_lo) * sign_of(f_hi) < 0) out.push_back(bisect(c, pts[i], pts[i + 1], f_lo));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompatiblePair shifted_counts(std::span<const double> f, std::span<const double> critical, double c) {
  const int deg = static_cast<int>(f.size()) - 1;
  auto changes = [](const std::vector<int>& s) {
    int n = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
      if (s[i] != 0 && s[i + 1] != 0 && s[i] != s[i + 1]) ++n;
    return n;
  };
  std::vector<int> pos{sign_of(c)};
  for (double x : critical)
    if (x > 0) pos.push_back(sign_of(horner(f, x) + c));
  pos.push_back(1);
  std::vector<int> neg{deg % 2 == 0 ? 1 : -1};
  for (double x : critical)
    if (x < 0) neg.push_back(sign_of(horner(f, x) + c));
  neg.push_back(sign_of(c));
  return {changes(pos), changes(neg)};
}

std::vector<double> expand_roots(std::span<const double> real_roots, std::span<const std::pair<double, double>> quads) {
  std::vector<double> p{1.0};
  auto mul = [&p](std::span<const double> factor) {
    std::vector<double> r(p.size() + factor.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < factor.size(); ++j) r[i + j] += p[i] * factor[j];
    p = std::move(r);
  };
  for (double r : real_roots) {
    const double lin[2] = {-r, 1.0};
    mul(lin);
  }
  for (auto [s, q] : quads) {
    const double quad[3] = {q, -s, 1.0};
    mul(quad);
  }
  return p;
}

}  // namespace descartes::detail
