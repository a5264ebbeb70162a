#include "descartes/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace descartes {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: " + std::string(s));
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer digits(std::string(whole) + std::string(frac.empty() ? "" : frac), 10);
    Rational q(digits, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_between(-hi, -lo);
  // 0 < lo <= hi
  Integer fl = floor_of(lo);
  Rational ceil_lo = (Rational(fl) == lo) ? lo : Rational(fl + 1);
  if (ceil_lo <= hi) return ceil_lo;
  // fl < lo <= hi < fl + 1
  Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

Rational snap_to_rational(double v, double rel) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot snap a non-finite value");
  if (v == 0.0) return Rational(0);
  double slack = std::abs(v) * rel;
  Rational lo(v - slack);
  Rational hi(v + slack);
  return simplest_between(lo, hi);
}

}  // namespace descartes
