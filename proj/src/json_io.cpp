#include "descartes/json_io.hpp"

#include <stdexcept>

namespace descartes::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

void require(bool ok, const std::string& what) {
  if (!ok) bad(what);
}

}  // namespace

json encode(const Rational& q) { return to_string(q); }

json encode(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.highest_first()) out.push_back(encode(c));
  return out;
}

json encode(const SignPattern& p) { return p.str(); }
json encode(const CompatiblePair& p) { return json::array({p.pos, p.neg}); }
json encode(const CompatibleCouple& c) { return {{"pattern", encode(c.pattern)}, {"pair", encode(c.pair)}}; }

json encode(const Orbit& o) {
  json out = json::array();
  for (const auto& m : o.members) out.push_back(encode(m));
  return out;
}

json encode(const Scp& s) {
  json out = json::array();
  for (const auto& p : s.pairs()) out.push_back(encode(p));
  return out;
}

json encode(const ScpCountTable& t) {
  json e = json::array();
  for (const auto& [pair, count] : t.entries) e.push_back({{"m", pair.pos}, {"n", pair.neg}, {"count", count.get_str()}});
  return {{"d", t.degree}, {"E", e}, {"F", t.total.get_str()}};
}

json encode(const ModuliOrder& o) { return o.str(); }

json encode(const RealizationTarget& t) {
  if (auto* c = std::get_if<CompatibleCouple>(&t)) {
    json j = encode(*c);
    j["kind"] = "couple";
    return j;
  }
  if (auto* s = std::get_if<Scp>(&t)) return {{"kind", "scp"}, {"scp", encode(*s)}};
  const auto& o = std::get<OrderCouple>(t);
  return {{"kind", "order"}, {"pattern", encode(o.pattern)}, {"order", encode(o.order)}};
}

json encode(const Certificate& c) {
  json counts = json::array();
  for (const auto& p : c.root_counts) counts.push_back(encode(p));
  json j = {{"pattern", encode(c.pattern)}, {"root_counts", counts}};
  if (c.order) j["order"] = encode(*c.order);
  return j;
}

json encode(const Witness& w) {
  return {{"poly", encode(w.poly)}, {"target", encode(w.target)}, {"certificate", encode(w.certificate)}};
}

json encode(const SearchOutcome& o) {
  json j = {{"status", o.found() ? "witness" : "exhausted"}, {"iterations", o.iterations}};
  if (o.witness) {
    j["witness"] = encode(*o.witness);
  } else {
    j["best_partial"] = {{"description", o.best.description}, {"score", o.best.score}};
    if (o.best.poly) j["best_partial"]["poly"] = encode(*o.best.poly);
    j["note"] = "budget exhausted: evidence of non-realizability, not a proof";
  }
  return j;
}

json encode(const NonRealizableCatalog& c) {
  json orbits = json::array();
  for (const auto& e : c.couple_orbits)
    orbits.push_back({{"generator", encode(e.generator)}, {"members", encode(e.orbit)}, {"source", to_string(e.source)}});
  json scps = json::array();
  for (const auto& e : c.scps)
    scps.push_back({{"scp", encode(e.scp)}, {"pattern", encode(scp_to_sign_pattern(e.scp))}, {"source", to_string(e.source)}});
  return {{"d", c.degree}, {"couple_orbits", orbits}, {"scps", scps}};
}

json encode(const multisym::IdentityCheck& check) {
  json j = {{"name", check.name}, {"statement", check.statement}, {"certified", check.certified}, {"holds", check.holds}};
  if (!check.holds) j["difference"] = to_string(check.difference);
  return j;
}

json encode(const multisym::SignClaimReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) claims.push_back({{"claim", c.name}, {"checked", c.checked}, {"held", c.held}});
  json counter = json::array();
  for (const auto& c : report.counterexamples)
    counter.push_back({{"index", c.index},
                       {"claim", c.claim},
                       {"a", encode(c.point.a)},
                       {"b", encode(c.point.b)},
                       {"f", encode(c.point.f)},
                       {"g", encode(c.point.g)}});
  return {{"samples", report.samples}, {"degenerate", report.degenerate}, {"claims", claims},
          {"counterexamples", counter}, {"all_hold", report.all_hold()}};
}

json encode(const quartic::QuarticPoint& q) {
  return {{"b3", encode(q.b3)}, {"b2", encode(q.b2)}, {"b1", encode(q.b1)}, {"b0", encode(q.b0)}};
}

// ------------------------------------------------------------- decoders

Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rational must be a string or an integer");
  return parse_rational(j.get<std::string>());
}

UniPoly decode_poly(const json& j) {
  require(j.is_array() && !j.empty(), "polynomial must be a non-empty coefficient array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(decode_rational(c));
  return UniPoly::from_highest_first(coeffs);
}

SignPattern decode_pattern(const json& j) {
  require(j.is_string(), "sign pattern must be a string");
  return SignPattern::parse(j.get<std::string>());
}

CompatiblePair decode_pair(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer(),
          "pair must be [pos, neg]");
  return {j[0].get<int>(), j[1].get<int>()};
}

CompatibleCouple decode_couple(const json& j) {
  require(j.is_object() && j.contains("pattern") && j.contains("pair"), "couple needs pattern and pair");
  return {decode_pattern(j["pattern"]), decode_pair(j["pair"])};
}

Scp decode_scp(const json& j) {
  require(j.is_array() && !j.empty(), "SCP must be a non-empty array of pairs");
  std::vector<CompatiblePair> pairs;
  for (const auto& p : j) pairs.push_back(decode_pair(p));
  return Scp(std::move(pairs));
}

ModuliOrder decode_order(const json& j) {
  require(j.is_string(), "order must be a string over P and N");
  return ModuliOrder::parse(j.get<std::string>());
}

ScpCountTable decode_count_table(const json& j) {
  require(j.is_object() && j.contains("d") && j.contains("E") && j.contains("F"), "count table needs d, E, F");
  ScpCountTable t;
  t.degree = j["d"].get<int>();
  for (const auto& e : j["E"]) t.entries[{e["m"].get<int>(), e["n"].get<int>()}] = Integer(e["count"].get<std::string>());
  t.total = Integer(j["F"].get<std::string>());
  return t;
}

RealizationTarget decode_target(const json& j) {
  if (j.is_array()) return decode_scp(j);
  require(j.is_object(), "target must be an object or an array of pairs");
  const std::string kind = j.value("kind", j.contains("order") ? "order" : j.contains("scp") ? "scp" : "couple");
  if (kind == "couple") return decode_couple(j);
  if (kind == "scp") return decode_scp(j.at("scp"));
  if (kind == "order") return OrderCouple{decode_pattern(j.at("pattern")), decode_order(j.at("order"))};
  bad("unknown target kind '" + kind + "'");
}

Certificate decode_certificate(const json& j) {
  require(j.is_object() && j.contains("pattern") && j.contains("root_counts"), "certificate needs pattern and root_counts");
  Certificate c;
  c.pattern = decode_pattern(j["pattern"]);
  for (const auto& p : j["root_counts"]) c.root_counts.push_back(decode_pair(p));
  if (j.contains("order")) c.order = decode_order(j["order"]);
  return c;
}

Witness decode_witness(const json& j) {
  require(j.is_object() && j.contains("poly") && j.contains("target") && j.contains("certificate"),
          "witness needs poly, target and certificate");
  return {decode_poly(j["poly"]), decode_target(j["target"]), decode_certificate(j["certificate"])};
}

}  // namespace descartes::io
