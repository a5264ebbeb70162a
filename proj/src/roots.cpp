#include "descartes/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace descartes {

// ---------------------------------------------------------------- Sturm

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree_part(p));
  if (chain_.front().degree() < 1) return;
  chain_.push_back(chain_.front().derivative());
  while (true) {
    UniPoly r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sgn(q(x)));
  return count_variations(signs);
}

int SturmSequence::variations_at_pos_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()));
  return count_variations(signs);
}

int SturmSequence::variations_at_neg_infinity() const {
  std::vector<int> signs;
  for (const auto& q : chain_) signs.push_back(sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1));
  return count_variations(signs);
}

int SturmSequence::count(const OpenInterval& interval) const {
  if (interval.lo && interval.hi && *interval.lo >= *interval.hi) return 0;
  int v_lo = interval.lo ? variations_at(*interval.lo) : variations_at_neg_infinity();
  int v_hi = interval.hi ? variations_at(*interval.hi) : variations_at_pos_infinity();
  int n = v_lo - v_hi;
  if (interval.hi && chain_.front()(*interval.hi) == 0) --n;
  return n;
}

int count_roots_in(const UniPoly& p, const OpenInterval& interval) { return SturmSequence(p).count(interval); }

// ----------------------------------------------------- square-free parts

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() < 1) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a0 = gcd(f, fp);
  UniPoly b = f / a0;
  UniPoly c = fp / a0;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = b / a;
    c = d / a;
    d = c - b.derivative();
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of the zero polynomial");
  if (p.degree() < 1) return UniPoly::constant(1);
  return (p / gcd(p, p.derivative())).monic();
}

SignedRootCount signed_root_counts(const UniPoly& p) {
  SignedRootCount out;
  int real_with_mult = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    SturmSequence sturm(factor);
    int pos = sturm.count(OpenInterval::positive());
    int neg = sturm.count(OpenInterval::negative());
    int zero = factor(Rational(0)) == 0 ? 1 : 0;
    out.pos_distinct += pos;
    out.neg_distinct += neg;
    out.pos_with_mult += mult * pos;
    out.neg_with_mult += mult * neg;
    out.zero_mult += mult * zero;
    real_with_mult += mult * (pos + neg + zero);
    if (mult > 1 && pos + neg + zero > 0) out.all_real_distinct = false;
  }
  out.complex_pairs = (p.degree() - real_with_mult) / 2;
  return out;
}

UniPoly from_roots(const std::vector<Rational>& pos_roots, const std::vector<Rational>& neg_roots,
                   const std::vector<std::pair<Rational, Rational>>& complex_pairs) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& r : pos_roots) {
    if (r <= 0) throw std::invalid_argument("positive root list holds " + to_string(r));
    p *= UniPoly::linear_root(r);
  }
  for (const auto& r : neg_roots) {
    if (r >= 0) throw std::invalid_argument("negative root list holds " + to_string(r));
    p *= UniPoly::linear_root(r);
  }
  for (const auto& [s, q] : complex_pairs) {
    if (s * s - 4 * q >= 0) throw std::invalid_argument("x^2 - s x + q is not irreducible over R");
    p *= UniPoly(std::vector<Rational>{q, -s, Rational(1)});
  }
  return p;
}

// ----------------------------------------------------------- resultant

Rational sylvester_resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant with the zero polynomial");
  const int m = p.degree();
  const int n = q.degree();
  const int size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(size));
  const auto ph = p.highest_first();
  const auto qh = q.highest_first();
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[r][r + k] = ph[k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = qh[k];

  Rational det(1);
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (int k = col; k < size; ++k) a[r][k] -= factor * a[col][k];
    }
  }
  return det;
}

// ------------------------------------------------------ root isolation

namespace {

Rational cauchy_bound(const UniPoly& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / p.leading())));
  return m + 1;
}

// A point strictly inside (lo, hi) that is not a root of s.
Rational split_point(const UniPoly& s, const Rational& lo, const Rational& hi) {
  for (int den = 2;; ++den)
    for (int num = 1; num < den; ++num) {
      Rational frac(num, den);
      frac.canonicalize();
      Rational t = lo + (hi - lo) * frac;
      if (s(t) != 0) return t;
    }
}

void bisect(const SturmSequence& sturm, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
  int n = sturm.count({lo, hi});
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = split_point(sturm.squarefree(), lo, hi);
  bisect(sturm, lo, mid, out);
  bisect(sturm, mid, hi, out);
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("root isolation of the zero polynomial");
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  SturmSequence sturm(p);
  Rational b = cauchy_bound(sturm.squarefree());
  bisect(sturm, -b, b, out);
  return out;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width) {
  UniPoly s = squarefree_part(p);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    Rational at_mid = s(mid);
    if (at_mid == 0) {
      Rational quarter = (iv.hi - iv.lo) / 4;
      iv = {mid - quarter, mid + quarter};
      continue;
    }
    if (sgn(s(iv.lo)) != sgn(at_mid))
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

// ------------------------------------------------------- moduli orders

ModuliOrder ModuliOrder::parse(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("empty moduli order");
  for (char c : word)
    if (c != 'P' && c != 'N') throw std::invalid_argument("moduli order letters are P and N");
  return ModuliOrder(std::string(word));
}

int ModuliOrder::count(char letter) const {
  return static_cast<int>(std::count(word_.begin(), word_.end(), letter));
}

namespace {

// Isolating intervals of the positive roots of p, all with lo >= 0.
std::vector<RootInterval> positive_root_intervals(const UniPoly& p) {
  std::vector<RootInterval> out;
  UniPoly s = squarefree_part(p);
  for (auto iv : isolate_real_roots(p)) {
    while (iv.lo < 0 && iv.hi > 0) iv = refine_root(s, iv, (iv.hi - iv.lo) / 2);
    if (iv.lo >= 0) out.push_back(iv);
  }
  return out;
}

}  // namespace

std::variant<ModuliOrder, OrderFailure> moduli_order(const UniPoly& p) {
  if (p.degree() < 1) return OrderFailure::NotHyperbolic;
  SignedRootCount counts = signed_root_counts(p);
  if (counts.complex_pairs > 0 || !counts.all_real_distinct || counts.zero_mult > 0)
    return OrderFailure::NotHyperbolic;
  UniPoly mirror = p.reflected();
  if (gcd(p, mirror).degree() > 0) return OrderFailure::EqualModuli;

  struct Tagged {
    RootInterval iv;
    char letter;
    const UniPoly* poly;
  };
  std::vector<Tagged> all;
  for (const auto& iv : positive_root_intervals(p)) all.push_back({iv, 'P', &p});
  for (const auto& iv : positive_root_intervals(mirror)) all.push_back({iv, 'N', &mirror});

  // Refine until pairwise disjoint; roots are distinct so this terminates.
  bool overlapping = true;
  while (overlapping) {
    overlapping = false;
    std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) { return a.iv.lo < b.iv.lo; });
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].iv.hi > all[i + 1].iv.lo) {
        overlapping = true;
        for (auto* t : {&all[i], &all[i + 1]}) t->iv = refine_root(*t->poly, t->iv, (t->iv.hi - t->iv.lo) / 2);
      }
    }
  }
  std::string word;
  for (const auto& t : all) word += t.letter;
  return ModuliOrder::parse(word);
}

// ---------------------------------------------------- derivative chains

std::variant<Scp, ChainFailure> derivative_chain_scp(const UniPoly& p) {
  const int d = p.degree();
  if (d < 1 || p.leading() <= 0) throw std::invalid_argument("derivative chain needs positive leading coefficient");
  std::vector<CompatiblePair> pairs;
  UniPoly q = p;
  for (int j = d; j >= 1; --j) {
    SignedRootCount c = signed_root_counts(q);
    if (!c.all_real_distinct) return ChainFailure{ChainFailure::Kind::MultipleRealRoot, j};
    if (c.zero_mult > 0) return ChainFailure{ChainFailure::Kind::ZeroRoot, j};
    pairs.push_back({c.pos_with_mult, c.neg_with_mult});
    q = q.derivative();
  }
  return Scp(std::move(pairs));
}

std::optional<SignPattern> sign_pattern_of(const UniPoly& p) {
  if (p.degree() < 1 || p.leading() <= 0) return std::nullopt;
  std::string text;
  for (int k = p.degree(); k >= 0; --k) {
    int s = sgn(p.coeff(k));
    if (s == 0) return std::nullopt;
    text += s > 0 ? '+' : '-';
  }
  return SignPattern::parse(text);
}

std::string to_string(OrderFailure f) {
  return f == OrderFailure::NotHyperbolic ? "NotHyperbolic" : "EqualModuli";
}

std::string to_string(const ChainFailure& f) {
  return std::string(f.kind == ChainFailure::Kind::MultipleRealRoot ? "MultipleRealRoot" : "ZeroRoot") + "(" +
         std::to_string(f.level) + ")";
}

}  // namespace descartes
