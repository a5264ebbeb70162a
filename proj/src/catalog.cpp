#include "descartes/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace descartes {

std::string to_string(CatalogSource source) {
  switch (source) {
    case CatalogSource::Couple: return "couple";
    case CatalogSource::CoupleScp: return "couple-scp";
    case CatalogSource::Truncation: return "truncation";
    case CatalogSource::CriticalLevels: return "critical-levels";
  }
  return "unknown";
}

bool NonRealizableCatalog::contains(const CompatibleCouple& couple) const {
  return std::any_of(couple_orbits.begin(), couple_orbits.end(),
                     [&](const CoupleOrbitEntry& e) { return e.orbit.contains(couple); });
}

bool NonRealizableCatalog::contains(const Scp& scp) const {
  auto it = std::lower_bound(scps.begin(), scps.end(), scp,
                             [](const ScpEntry& e, const Scp& s) { return e.scp < s; });
  return it != scps.end() && it->scp == scp;
}

namespace {

std::vector<CompatibleCouple> generators(int d) {
  using P = CompatiblePair;
  switch (d) {
    case 4: return {{SignPattern::from_blocks({1, 3, 1}), P{0, 2}}};
    case 5: return {{SignPattern::from_blocks({1, 4, 1}), P{0, 3}}};
    case 6:
      return {{SignPattern::from_blocks({1, 5, 1}), P{0, 2}},
              {SignPattern::from_blocks({1, 5, 1}), P{0, 4}},
              {SignPattern::from_blocks({4, 1, 2}), P{2, 0}},
              {SignPattern::from_blocks({2, 4, 1}), P{0, 4}}};
    default: return {};
  }
}

std::vector<Scp> critical_level_scps(int d) {
  if (d != 6) return {};
  Scp diamond({{0, 2}, {2, 3}, {1, 3}, {1, 2}, {1, 1}, {1, 0}});
  return {diamond, apply_im_scp(diamond)};
}

}  // namespace

NonRealizableCatalog catalog(int degree) {
  if (degree < 1 || degree > 6) throw std::out_of_range("catalog covers degrees 1..6");
  NonRealizableCatalog cat;
  cat.degree = degree;

  for (const auto& g : generators(degree)) cat.couple_orbits.push_back({g, orbit(g), CatalogSource::Couple});

  std::map<Scp, CatalogSource> found;
  for (const auto& entry : cat.couple_orbits)
    for (const auto& member : entry.orbit.members)
      for (auto& s : scps_for_couple(member)) found.emplace(std::move(s), CatalogSource::CoupleScp);

  if (degree >= 2) {
    const NonRealizableCatalog lower = catalog(degree - 1);
    if (!lower.scps.empty())
      for (auto& s : enumerate_scps(degree))
        if (lower.contains(truncate(s))) found.emplace(std::move(s), CatalogSource::Truncation);
  }

  for (auto& s : critical_level_scps(degree)) found.emplace(std::move(s), CatalogSource::CriticalLevels);

  for (auto& [scp, source] : found) cat.scps.push_back({scp, source});
  return cat;
}

std::vector<ScpPatternAudit> audit_scp_patterns(const NonRealizableCatalog& cat) {
  std::vector<ScpPatternAudit> out;
  for (const auto& e : cat.scps) {
    SignPattern pattern = scp_to_sign_pattern(e.scp);
    bool in_couples = false;
    for (const auto& o : cat.couple_orbits)
      for (const auto& m : o.orbit.members)
        if (m.pattern == pattern) in_couples = true;
    out.push_back({e.scp, pattern, e.source, in_couples});
  }
  return out;
}

}  // namespace descartes
