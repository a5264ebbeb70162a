#pragma once

#include <string>
#include <vector>

#include "descartes/combinatorics.hpp"
#include "descartes/scp.hpp"

namespace descartes {

/// Why an entry is known to be non-realizable.
enum class CatalogSource {
  Couple,          ///< a non-realizable compatible couple (orbit)
  CoupleScp,       ///< an SCP whose top pair and pattern form such a couple
  Truncation,      ///< its truncation is already non-realizable
  CriticalLevels,  ///< ruled out by the critical-level argument at d = 6
};

std::string to_string(CatalogSource source);

struct CoupleOrbitEntry {
  CompatibleCouple generator;
  Orbit orbit;
  CatalogSource source = CatalogSource::Couple;
};

struct ScpEntry {
  Scp scp;
  CatalogSource source;
};

struct NonRealizableCatalog {
  int degree = 0;
  std::vector<CoupleOrbitEntry> couple_orbits;
  /// Sorted by SCP; each SCP appears once, tagged with its first source.
  std::vector<ScpEntry> scps;

  bool contains(const CompatibleCouple& couple) const;
  bool contains(const Scp& scp) const;
};

/// Known non-realizable couples and SCPs for 1 <= d <= 6 (empty for
/// d <= 3). Throws std::out_of_range for other degrees.
NonRealizableCatalog catalog(int degree);

/// For each catalogued SCP: whether its sign pattern also appears in some
/// catalogued non-realizable couple of the same degree.
struct ScpPatternAudit {
  Scp scp;
  SignPattern pattern;
  CatalogSource source;
  bool pattern_in_couple_catalog;
};
std::vector<ScpPatternAudit> audit_scp_patterns(const NonRealizableCatalog& cat);

}  // namespace descartes
