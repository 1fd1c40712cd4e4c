#pragma once

// Deterministic serialization of census and per-module results.
// Rationals are {"num": "...", "den": "..."} strings; no floating point.

#include <json.hpp>
#include <string>

#include "drinfeld/census.hpp"

namespace drinfeld {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

Json rational_json(const Rational& r);

/// {c, mu, P, m, disc, chi, ordinary, supersingular, height, hasse_weil_ok, minimal_poly_degree}.
Json charpoly_json(const DrinfeldModule& phi, const CharPoly& cp);
/// {i1, i2, cyclic, criteria{...}}.
Json structure_json(const InvariantFactors& inv, const CriteriaReport& cr);
Json realize_json(const FieldTower& F, const UPoly& i1, const UPoly& i2, const RealizeResult& r);

Json census_json(const CensusReport& r);
Json trend_json(const std::vector<TrendRow>& rows, int d, int m);

/// One row per iso-class, header first.
std::string census_csv(const CensusReport& r);
std::string census_text(const CensusReport& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace drinfeld
