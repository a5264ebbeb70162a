#include "descartes/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace descartes {

SignPattern SignPattern::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("sign pattern needs at least two signs");
  if (text.front() != '+') throw std::invalid_argument("sign pattern must start with '+'");
  for (char c : text)
    if (c != '+' && c != '-') throw std::invalid_argument("sign pattern must be over {+,-}");
  return SignPattern(std::string(text));
}

SignPattern SignPattern::from_blocks(const std::vector<int>& blocks) {
  std::string text;
  char current = '+';
  for (int m : blocks) {
    if (m < 1) throw std::invalid_argument("block lengths must be positive");
    text.append(static_cast<std::size_t>(m), current);
    current = current == '+' ? '-' : '+';
  }
  return parse(text);
}

SignPattern SignPattern::from_blocks(std::initializer_list<int> blocks) {
  return from_blocks(std::vector<int>(blocks));
}

SignPattern SignPattern::from_bits(int degree, std::uint64_t minus_bits) {
  if (degree < 1 || degree > 63) throw std::invalid_argument("degree out of range");
  std::string text(static_cast<std::size_t>(degree) + 1, '+');
  for (int k = 1; k <= degree; ++k)
    if ((minus_bits >> (k - 1)) & 1u) text[static_cast<std::size_t>(k)] = '-';
  return SignPattern(std::move(text));
}

SignPattern SignPattern::prefix(int k) const {
  return parse(std::string_view(text_).substr(0, static_cast<std::size_t>(k) + 1));
}

ChangePreservationPattern ChangePreservationPattern::parse(std::string_view letters) {
  if (letters.empty()) throw std::invalid_argument("empty change-preservation pattern");
  for (char c : letters)
    if (c != 'c' && c != 'p') throw std::invalid_argument("change-preservation letters are c and p");
  return ChangePreservationPattern(std::string(letters));
}

int ChangePreservationPattern::count(char letter) const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), letter));
}

bool Orbit::contains(const CompatibleCouple& c) const {
  return std::find(members.begin(), members.end(), c) != members.end();
}

int sign_changes(const SignPattern& pattern) {
  int changes = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i)
    if (pattern[i] != pattern[i - 1]) ++changes;
  return changes;
}

CompatiblePair descartes_pair(const SignPattern& pattern) {
  int c = sign_changes(pattern);
  return {c, pattern.degree() - c};
}

std::vector<CompatiblePair> compatible_pairs(const SignPattern& pattern) {
  auto [c, p] = descartes_pair(pattern);
  std::vector<CompatiblePair> pairs;
  for (int pos = c; pos >= 0; pos -= 2)
    for (int neg = p; neg >= 0; neg -= 2) pairs.push_back({pos, neg});
  return pairs;
}

bool is_compatible(const SignPattern& pattern, const CompatiblePair& pair) {
  auto [c, p] = descartes_pair(pattern);
  return pair.pos >= 0 && pair.neg >= 0 && pair.pos <= c && pair.neg <= p && (c - pair.pos) % 2 == 0 &&
         (p - pair.neg) % 2 == 0;
}

CompatibleCouple make_couple(const SignPattern& pattern, const CompatiblePair& pair) {
  if (!is_compatible(pattern, pair))
    throw std::invalid_argument("pair (" + std::to_string(pair.pos) + "," + std::to_string(pair.neg) +
                                ") is not compatible with " + pattern.str());
  return {pattern, pair};
}

ChangePreservationPattern to_change_preservation(const SignPattern& pattern) {
  std::string letters;
  for (std::size_t i = 1; i < pattern.size(); ++i) letters += pattern[i] != pattern[i - 1] ? 'c' : 'p';
  return ChangePreservationPattern::parse(letters);
}

SignPattern from_change_preservation(const ChangePreservationPattern& cp) {
  std::string text = "+";
  for (char letter : cp.str()) {
    char last = text.back();
    text += letter == 'p' ? last : (last == '+' ? '-' : '+');
  }
  return SignPattern::parse(text);
}

SignPattern im_pattern(const SignPattern& pattern) {
  std::string text = pattern.str();
  for (std::size_t k = 1; k < text.size(); k += 2) text[k] = text[k] == '+' ? '-' : '+';
  return SignPattern::parse(text);
}

SignPattern ir_pattern(const SignPattern& pattern) {
  std::string text(pattern.str().rbegin(), pattern.str().rend());
  if (text.front() == '-')
    for (char& c : text) c = c == '+' ? '-' : '+';
  return SignPattern::parse(text);
}

CompatibleCouple apply_im(const CompatibleCouple& couple) {
  return {im_pattern(couple.pattern), {couple.pair.neg, couple.pair.pos}};
}

CompatibleCouple apply_ir(const CompatibleCouple& couple) { return {ir_pattern(couple.pattern), couple.pair}; }

Orbit orbit(const CompatibleCouple& couple) {
  std::set<CompatibleCouple> members{couple, apply_im(couple), apply_ir(couple), apply_im(apply_ir(couple))};
  return Orbit{{members.begin(), members.end()}};
}

std::vector<CompatibleCouple> enumerate_couples(int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<SignPattern> patterns;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << degree); ++bits)
    patterns.push_back(SignPattern::from_bits(degree, bits));
  std::sort(patterns.begin(), patterns.end());
  std::vector<CompatibleCouple> couples;
  for (const auto& p : patterns)
    for (const auto& pair : compatible_pairs(p)) couples.push_back({p, pair});
  return couples;
}

std::vector<Orbit> enumerate_orbits(int degree) {
  std::vector<Orbit> orbits;
  std::set<CompatibleCouple> seen;
  for (const auto& c : enumerate_couples(degree)) {
    if (seen.contains(c)) continue;
    Orbit o = orbit(c);
    seen.insert(o.members.begin(), o.members.end());
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const Orbit& a, const Orbit& b) { return a.representative() < b.representative(); });
  return orbits;
}

}  // namespace descartes
