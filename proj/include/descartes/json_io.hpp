#pragma once

// JSON codecs. Rationals are "p/q" strings and polynomials are arrays of
// those, highest degree first, so every value round-trips exactly.

#include <json.hpp>

#include "descartes/catalog.hpp"
#include "descartes/multisym.hpp"
#include "descartes/quartic.hpp"
#include "descartes/realize.hpp"
#include "descartes/scp.hpp"

namespace descartes::io {

using nlohmann::json;

json encode(const Rational& q);
json encode(const UniPoly& p);
json encode(const SignPattern& p);
json encode(const CompatiblePair& p);
json encode(const CompatibleCouple& c);
json encode(const Orbit& o);
json encode(const Scp& s);
json encode(const ScpCountTable& t);
json encode(const ModuliOrder& o);
json encode(const RealizationTarget& t);
json encode(const Certificate& c);
json encode(const Witness& w);
json encode(const SearchOutcome& o);
json encode(const NonRealizableCatalog& c);
json encode(const multisym::IdentityCheck& check);
json encode(const multisym::SignClaimReport& report);
json encode(const quartic::QuarticPoint& q);

/// Decoders throw std::invalid_argument on malformed input.
Rational decode_rational(const json& j);
UniPoly decode_poly(const json& j);
SignPattern decode_pattern(const json& j);
CompatiblePair decode_pair(const json& j);
CompatibleCouple decode_couple(const json& j);
Scp decode_scp(const json& j);
ModuliOrder decode_order(const json& j);
ScpCountTable decode_count_table(const json& j);
/// {"kind": "couple"|"scp"|"order", ...}. A bare couple object, a bare
/// array of pairs (SCP) or {"pattern","order"} are accepted too.
RealizationTarget decode_target(const json& j);
Certificate decode_certificate(const json& j);
Witness decode_witness(const json& j);

}  // namespace descartes::io
