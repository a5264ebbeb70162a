#include "descartes/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

namespace descartes {

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[Exponents{}] = c;
}

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly p;
  Exponents e{};
  e[static_cast<std::size_t>(v)] = 1;
  p.terms_[e] = 1;
  return p;
}

int MultiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, int(e[static_cast<std::size_t>(v)]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e;
      for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents ne = e;
    --ne[i];
    r.add_term(ne, c * e[i]);
  }
  return r;
}

MultiPoly MultiPoly::antiderivative(Var v) const {
  const auto i = static_cast<std::size_t>(v);
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    ++ne[i];
    r.add_term(ne, c / ne[i]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  const auto i = static_cast<std::size_t>(v);
  std::vector<MultiPoly> powers{MultiPoly(1)};
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[i]) powers.push_back(powers.back() * value);
    Exponents rest = e;
    rest[i] = 0;
    MultiPoly mono;
    mono.terms_[rest] = c;
    r += mono * powers[e[i]];
  }
  return r;
}

Rational MultiPoly::evaluate(const std::array<Rational, kVarCount>& point) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < kVarCount; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

UniPoly MultiPoly::specialize_to_x(const Rational& a, const Rational& b, const Rational& f,
                                   const Rational& g) const {
  const std::array<Rational, 4> values{a, b, f, g};
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(0, degree_in(Var::x) + 1)));
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < 4; ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    coeffs[e[static_cast<std::size_t>(Var::x)]] += t;
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly pow(const MultiPoly& p, int e) {
  MultiPoly r(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  static constexpr const char* names[kVarCount] = {"a", "b", "f", "g", "x"};
  std::vector<std::pair<MultiPoly::Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    int dl = std::accumulate(l.first.begin(), l.first.end(), 0);
    int dr = std::accumulate(r.first.begin(), r.first.end(), 0);
    if (dl != dr) return dl > dr;
    return l.first < r.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool constant = std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << int(e[i]);
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace descartes
