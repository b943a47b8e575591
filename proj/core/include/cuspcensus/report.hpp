#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cuspcensus/census.hpp"

namespace cuspcensus {

using ordered_json = nlohmann::ordered_json;

// Stable schema: d1, d2, map, formulas, computed, genericity, serreResidual,
// seed, flags. Polynomials serialize in the text grammar.
ordered_json census_to_json(const CensusReport& r, const PlaneMap& F);

// Inverse of census_to_json on its own output (round-trip check).
std::pair<CensusReport, PlaneMap> census_from_json(const ordered_json& j);

std::string census_to_text(const CensusReport& r, const PlaneMap& F);

// Map file format: two lines, "f = <poly>" and "g = <poly>".
PlaneMap read_map_file(std::istream& in);
std::string write_map_file(const PlaneMap& F);

}  // namespace cuspcensus
