// descartes: command-line front end for the sign-pattern toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "descartes/catalog.hpp"
#include "descartes/json_io.hpp"
#include "descartes/multisym.hpp"
#include "descartes/parallel.hpp"
#include "descartes/quartic.hpp"
#include "descartes/realize.hpp"
#include "descartes/scp.hpp"

using namespace descartes;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExhausted = 1;
constexpr int kExitInvalid = 2;

struct RunConfig {
  int degree = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;  // 0: the per-target default
  std::string format;        // empty: the command's default
  std::string output;
  int threads = 0;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool degree) {
  if (degree) cmd->add_option("-d,--degree", cfg.degree, "polynomial degree")->check(CLI::Range(1, 30));
  cmd->add_option("--seed", cfg.seed, "random seed (default 0)");
  cmd->add_option("--budget", cfg.budget, "search iterations (default: per-target)");
  cmd->add_option("--format", cfg.format, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  cmd->add_option("--threads", cfg.threads, "worker threads for parallel kernels");
}

std::string format_of(const RunConfig& cfg, const std::string& fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + cfg.output);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string pair_str(const CompatiblePair& p) { return "(" + std::to_string(p.pos) + "," + std::to_string(p.neg) + ")"; }

std::string scp_str(const Scp& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.pairs().size(); ++i) out += (i ? "," : "") + pair_str(s.pairs()[i]);
  return out + ")";
}

std::string couple_str(const CompatibleCouple& c) { return "(" + c.pattern.str() + ", " + pair_str(c.pair) + ")"; }

// ------------------------------------------------------------ commands

int cmd_count_scps(const RunConfig& cfg, bool check) {
  const ScpCountTable t = count_scps(cfg.degree);
  if (check) {
    const auto listed = enumerate_scps(cfg.degree).size();
    if (Integer(static_cast<unsigned long>(listed)) != t.total)
      throw std::logic_error("recurrence and enumeration disagree");
  }
  const std::string fmt = format_of(cfg, "table");
  if (fmt == "json") {
    emit(cfg, dump(io::encode(t)));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "m,n,count\n";
    for (const auto& [pair, count] : t.entries) os << pair.pos << "," << pair.neg << "," << count << "\n";
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << "F_" << t.degree << " = " << t.total << "\n";
    for (const auto& [pair, count] : t.entries)
      os << "E_" << t.degree << pair_str(pair) << " = " << count << "\n";
    emit(cfg, os.str());
  }
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, const std::string& what) {
  const std::string fmt = format_of(cfg, "table");
  json j = json::array();
  std::ostringstream os;
  if (what == "couples") {
    for (const auto& c : enumerate_couples(cfg.degree)) {
      j.push_back(io::encode(c));
      os << couple_str(c) << "\n";
    }
  } else if (what == "scps") {
    for (const auto& s : enumerate_scps(cfg.degree)) {
      j.push_back(io::encode(s));
      os << scp_str(s) << "  " << scp_to_sign_pattern(s).str() << "\n";
    }
  } else {
    for (const auto& o : enumerate_orbits(cfg.degree)) {
      j.push_back(io::encode(o));
      for (std::size_t i = 0; i < o.members.size(); ++i) os << (i ? "  " : "") << couple_str(o.members[i]);
      os << "\n";
    }
  }
  if (fmt == "json") {
    emit(cfg, dump(j));
  } else {
    std::ostringstream head;
    head << "# " << j.size() << " " << what << " of degree " << cfg.degree << "\n";
    emit(cfg, head.str() + os.str());
  }
  return kExitOk;
}

json read_json_argument(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot read " + arg.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("target is not valid JSON: ") + e.what());
  }
}

int cmd_realize(const RunConfig& cfg, const std::string& kind, const std::string& target_arg, int streams) {
  RealizationTarget target;
  try {
    json j = read_json_argument(target_arg);
    if (j.is_object() && !j.contains("kind")) j["kind"] = kind;
    target = io::decode_target(j);
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  const bool kind_ok = (kind == "couple" && std::holds_alternative<CompatibleCouple>(target)) ||
                       (kind == "scp" && std::holds_alternative<Scp>(target)) ||
                       (kind == "order" && std::holds_alternative<OrderCouple>(target));
  if (!kind_ok) throw InvalidInput("target does not match 'realize " + kind + "'");
  if (!is_internally_compatible(target)) throw InvalidInput("target is not compatible: " + describe(target));

  SearchBudget budget = kind == "couple" ? default_couple_budget(cfg.seed)
                        : kind == "scp"  ? default_scp_budget(degree_of(target), cfg.seed)
                                         : default_order_budget(cfg.seed);
  if (cfg.budget > 0) budget.max_iterations = cfg.budget;
  const SearchOutcome out = realize_streams(target, budget, streams);

  const std::string fmt = format_of(cfg, "json");
  json j = io::encode(out);
  j["target"] = io::encode(target);
  j["seed"] = cfg.seed;
  j["streams"] = streams;
  if (fmt == "json") {
    emit(cfg, dump(j));
  } else {
    std::ostringstream os;
    os << describe(target) << ": ";
    if (out.found())
      os << "witness " << to_string(out.witness->poly) << " (" << out.iterations << " iterations)\n";
    else
      os << "exhausted after " << out.iterations << " iterations; " << out.best.description
         << "\n(exhaustion is evidence of non-realizability, not a proof)\n";
    emit(cfg, os.str());
  }
  return out.found() ? kExitOk : kExitExhausted;
}

quartic::QuarticPoint parse_point(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
  if (v.size() != 4) throw InvalidInput("a quartic point is b3,b2,b1,b0");
  return {v[0], v[1], v[2], v[3]};
}

int cmd_classify(const RunConfig& cfg, const std::string& point) {
  quartic::QuarticPoint q;
  try {
    q = parse_point(point);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  const auto label = quartic::classify(q);
  const auto disc = quartic::discriminant_membership(q);
  const char* kinds[] = {"off_D4", "on_D4_real_double", "on_Delta2_complex_double"};
  const std::string fmt = format_of(cfg, "table");
  if (fmt == "json") {
    json j = io::encode(q);
    j["label"] = quartic::to_string(label);
    j["discriminant"] = {{"kind", kinds[static_cast<int>(disc.kind)]},
                         {"resultant", io::encode(disc.resultant)},
                         {"multiple_root_signs", disc.multiple_root_signs}};
    emit(cfg, dump(j));
  } else {
    std::ostringstream os;
    os << to_string(q.poly()) << "\nlabel: " << quartic::to_string(label) << "\ndiscriminant: "
       << kinds[static_cast<int>(disc.kind)] << " (Res(Q,Q') = " << to_string(disc.resultant) << ")\n";
    emit(cfg, os.str());
  }
  return kExitOk;
}

int coefficient_index(const std::string& name) {
  static const std::map<std::string, int> names{{"b0", 0}, {"b1", 1}, {"b2", 2}, {"b3", 3}};
  auto it = names.find(name);
  if (it == names.end()) throw InvalidInput("unknown coefficient '" + name + "' (use b0..b3)");
  return it->second;
}

std::vector<std::pair<std::string, std::string>> split_assignments(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidInput("expected name=value in '" + item + "'");
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

int cmd_slice(const RunConfig& cfg, const std::string& fix, const std::string& vary) {
  quartic::SliceSpec spec;
  try {
    auto fixed = split_assignments(fix);
    auto varied = split_assignments(vary);
    if (fixed.size() != 2 || varied.size() != 2) throw InvalidInput("fix two coefficients and vary two");
    for (const auto& [name, value] : fixed) spec.base.coeff(coefficient_index(name)) = parse_rational(value);
    quartic::SliceAxis* axes[] = {&spec.first, &spec.second};
    for (int i = 0; i < 2; ++i) {
      const auto& [name, range] = varied[static_cast<std::size_t>(i)];
      auto c1 = range.find(':'), c2 = range.rfind(':');
      if (c1 == std::string::npos || c1 == c2) throw InvalidInput("range must be lo:hi:n");
      axes[i]->coeff = coefficient_index(name);
      axes[i]->lo = parse_rational(range.substr(0, c1));
      axes[i]->hi = parse_rational(range.substr(c1 + 1, c2 - c1 - 1));
      axes[i]->resolution = std::stoi(range.substr(c2 + 1));
    }
    std::vector<int> used{spec.first.coeff, spec.second.coeff};
    for (const auto& [name, value] : fixed) used.push_back(coefficient_index(name));
    std::sort(used.begin(), used.end());
    if (std::unique(used.begin(), used.end()) != used.end()) throw InvalidInput("each coefficient fixed or varied once");
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  std::vector<quartic::SliceRow> rows;
  try {
    rows = quartic::slice_grid(spec);
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(e.what());
  }
  const std::string fmt = format_of(cfg, "csv");
  if (fmt == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"coord1", io::encode(r.coord1)}, {"coord2", io::encode(r.coord2)}, {"label", quartic::to_string(r.label)}});
    emit(cfg, dump(j));
  } else {
    emit(cfg, quartic::slice_csv(rows));
  }
  return kExitOk;
}

int cmd_catalog(const RunConfig& cfg, bool audit) {
  NonRealizableCatalog cat;
  try {
    cat = catalog(cfg.degree);
  } catch (const std::out_of_range& e) {
    throw InvalidInput(e.what());
  }
  const std::string fmt = format_of(cfg, "table");
  const auto audits = audit_scp_patterns(cat);
  if (fmt == "json") {
    json j = io::encode(cat);
    if (audit) {
      json a = json::array();
      for (const auto& e : audits)
        a.push_back({{"scp", io::encode(e.scp)}, {"pattern", e.pattern.str()}, {"source", to_string(e.source)},
                     {"pattern_in_couple_catalog", e.pattern_in_couple_catalog}});
      j["scp_pattern_audit"] = a;
    }
    emit(cfg, dump(j));
    return kExitOk;
  }
  std::ostringstream os;
  os << "degree " << cat.degree << ": " << cat.couple_orbits.size() << " non-realizable couple orbit(s)\n";
  for (const auto& e : cat.couple_orbits) {
    os << "  orbit of " << couple_str(e.generator) << ":";
    for (const auto& m : e.orbit.members) os << " " << couple_str(m);
    os << "\n";
  }
  os << cat.scps.size() << " non-realizable SCP(s)\n";
  for (const auto& e : cat.scps)
    os << "  " << scp_str(e.scp) << "  " << scp_to_sign_pattern(e.scp).str() << "  [" << to_string(e.source) << "]\n";
  if (audit) {
    int outside = 0;
    os << "SCP pattern audit (pattern also carried by a non-realizable couple?)\n";
    for (const auto& e : audits) {
      os << "  " << scp_str(e.scp) << "  " << e.pattern.str() << "  " << (e.pattern_in_couple_catalog ? "yes" : "no")
         << "\n";
      outside += !e.pattern_in_couple_catalog;
    }
    os << outside << " catalogued SCP(s) define a pattern outside the couple catalog\n";
  }
  emit(cfg, os.str());
  return kExitOk;
}

int cmd_verify_identities(const RunConfig& cfg) {
  const auto checks = multisym::verify_identities();
  bool ok = true;
  json list = json::array();
  for (const auto& c : checks) {
    list.push_back(io::encode(c));
    if (c.certified) ok = ok && c.holds;
  }
  const std::string fmt = format_of(cfg, "json");
  if (fmt == "json") {
    emit(cfg, dump({{"identities", list}, {"all_certified_hold", ok}}));
  } else {
    std::ostringstream os;
    for (const auto& c : checks)
      os << (c.certified ? (c.holds ? "PASS  " : "FAIL  ") : (c.holds ? "TRUE  " : "FALSE ")) << c.name << ": "
         << c.statement << "\n";
    emit(cfg, os.str());
  }
  return ok ? kExitOk : kExitExhausted;
}

int cmd_verify_theorem1(const RunConfig& cfg, std::uint64_t samples) {
  const auto report = multisym::check_sign_claims(samples, cfg.seed);
  const std::string fmt = format_of(cfg, "table");
  if (fmt == "json") {
    emit(cfg, dump(io::encode(report)));
  } else {
    std::ostringstream os;
    os << report.samples << " sampled parameter points (" << report.degenerate << " degenerate, skipped)\n";
    for (const auto& c : report.claims) os << "  " << c.name << ": " << c.held << "/" << c.checked << "\n";
    os << (report.all_hold() ? "no counterexamples" : "COUNTEREXAMPLES FOUND") << "\n";
    emit(cfg, os.str());
  }
  return report.all_hold() ? kExitOk : kExitExhausted;
}

int cmd_report_ratios(const RunConfig& cfg, int max_degree) {
  std::vector<Integer> f;
  for (int d = 1; d <= max_degree; ++d) f.push_back(count_scps(d).total);
  const std::string fmt = format_of(cfg, "table");
  json rows = json::array();
  std::ostringstream os;
  os << "d  F_d  F_d/2  ratio to previous\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    json row = {{"d", i + 1}, {"F", f[i].get_str()}, {"half", Integer(f[i] / 2).get_str()}};
    os << i + 1 << "  " << f[i] << "  " << f[i] / 2;
    if (i > 0) {
      Rational r(f[i], f[i - 1]);
      r.canonicalize();
      std::ostringstream dec;
      dec << std::fixed << std::setprecision(4) << r.get_d();
      row["ratio"] = to_string(r);
      row["decimal"] = dec.str();
      os << "  " << to_string(r) << " = " << dec.str();
    }
    os << "\n";
    rows.push_back(row);
  }
  emit(cfg, fmt == "json" ? dump(rows) : os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sign patterns, root counts and realizability of real univariate polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;

  bool check = false;
  auto* count = app.add_subcommand("count-scps", "count SCPs by the E_d(m,n) recurrence");
  add_common(count, cfg, true);
  count->add_flag("--check", check, "also enumerate the SCPs and compare totals");

  std::string what;
  auto* enumerate = app.add_subcommand("enumerate", "list couples, SCPs or orbits of a degree");
  add_common(enumerate, cfg, true);
  enumerate->add_option("what", what, "couples | scps | orbits")->required()->check(CLI::IsMember({"couples", "scps", "orbits"}));

  std::string kind, target;
  int streams = 1;
  auto* realize_cmd = app.add_subcommand("realize", "search for a polynomial realizing a target (exit 1 = exhausted)");
  add_common(realize_cmd, cfg, false);
  realize_cmd->add_option("kind", kind, "couple | scp | order")->required()->check(CLI::IsMember({"couple", "scp", "order"}));
  realize_cmd->add_option("--target", target, "target JSON, or @file")->required();
  realize_cmd->add_option("--streams", streams, "independent search streams (only 1 is reproducible)")->check(CLI::PositiveNumber);

  std::string point;
  auto* classify_cmd = app.add_subcommand("classify-quartic", "region label of x^4 + b3 x^3 + b2 x^2 + b1 x + b0");
  add_common(classify_cmd, cfg, false);
  classify_cmd->add_option("--point", point, "b3,b2,b1,b0 as rationals")->required();

  std::string fix, vary;
  auto* slice = app.add_subcommand("slice-quartic", "classify a 2-D grid of quartics (CSV)");
  add_common(slice, cfg, false);
  slice->add_option("--fix", fix, "e.g. b3=-2,b0=4")->required();
  slice->add_option("--vary", vary, "e.g. b2=-6:0:50,b1=-4:4:50")->required();

  bool audit = false;
  auto* cat = app.add_subcommand("catalog", "known non-realizable couples and SCPs (d <= 6)");
  add_common(cat, cfg, true);
  cat->add_flag("--audit-scps", audit, "report which SCP patterns also carry a non-realizable couple");

  auto* identities = app.add_subcommand("verify-identities", "check the polynomial identities behind the d = 6 SCP result");
  add_common(identities, cfg, false);

  std::uint64_t samples = 10000;
  auto* theorem = app.add_subcommand("verify-theorem1", "sample the sign inequalities on exact parameter points");
  add_common(theorem, cfg, false);
  theorem->add_option("--samples", samples, "number of parameter points");

  int max_degree = 6;
  auto* ratios = app.add_subcommand("report-ratios", "consecutive ratios of SCP counts");
  add_common(ratios, cfg, false);
  ratios->add_option("--max-degree", max_degree, "largest degree")->check(CLI::Range(2, 30));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (cfg.threads > 0) set_worker_count(cfg.threads);

  try {
    if (count->parsed()) return cmd_count_scps(cfg, check);
    if (enumerate->parsed()) return cmd_enumerate(cfg, what);
    if (realize_cmd->parsed()) return cmd_realize(cfg, kind, target, streams);
    if (classify_cmd->parsed()) return cmd_classify(cfg, point);
    if (slice->parsed()) return cmd_slice(cfg, fix, vary);
    if (cat->parsed()) return cmd_catalog(cfg, audit);
    if (identities->parsed()) return cmd_verify_identities(cfg);
    if (theorem->parsed()) return cmd_verify_theorem1(cfg, samples);
    if (ratios->parsed()) return cmd_report_ratios(cfg, max_degree);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
