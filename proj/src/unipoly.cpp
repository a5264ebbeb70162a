#include "descartes/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descartes {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly UniPoly::from_highest_first(std::span<const Rational> coeffs) {
  std::vector<Rational> asc(coeffs.rbegin(), coeffs.rend());
  return UniPoly(std::move(asc));
}

UniPoly UniPoly::from_highest_first(std::initializer_list<Rational> coeffs) {
  return from_highest_first(std::span<const Rational>(coeffs.begin(), coeffs.size()));
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly(std::vector<Rational>{-r, Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(power)];
}

const Rational& UniPoly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

std::vector<Rational> UniPoly::highest_first() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UniPoly::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::derivative(int order) const {
  UniPoly p = *this;
  for (int i = 0; i < order; ++i) p = p.derivative();
  return p;
}

UniPoly UniPoly::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / static_cast<long>(k + 1);
  return UniPoly(std::move(a));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly p = *this;
  Rational lc = leading();
  for (auto& c : p.coeffs_) c /= lc;
  return p;
}

UniPoly UniPoly::reflected() const {
  UniPoly p = *this;
  for (std::size_t k = 1; k < p.coeffs_.size(); k += 2) p.coeffs_[k] = -p.coeffs_[k];
  return p;
}

UniPoly UniPoly::reversed() const {
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return UniPoly(std::move(r));
}

int UniPoly::zero_root_multiplicity() const {
  int k = 0;
  while (k <= degree() && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return is_zero() ? 0 : k;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {UniPoly{}, num};
  std::vector<Rational> rem(num.ascending().begin(), num.ascending().end());
  const int dd = den.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational& lc = den.leading();
  for (int k = num.degree(); k >= dd; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lc;
    quot[static_cast<std::size_t>(k - dd)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * den.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator/(const UniPoly& num, const UniPoly& den) { return divmod(num, den).first; }
UniPoly operator%(const UniPoly& num, const UniPoly& den) { return divmod(num, den).second; }

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly r = UniPoly::constant(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeff(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || k == 0) os << mag.get_str();
    if (k > 0) {
      if (!unit) os << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace descartes
