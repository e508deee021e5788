#pragma once

#include <string>
#include <vector>

#include "sspalign/types.hpp"

namespace sspalign {

/**
 * Parses `region,feature,year,value` rows into per-region datasets.
 *
 * Accepts LF or CRLF, requires the exact header, parses numbers
 * locale-independently, and sorts points per series. Rows may arrive in
 * any order. Throws Error with the offending 1-based line number for a
 * malformed header, an unparseable number, a duplicate
 * (region, feature, year) key, or a non-finite value.
 */
std::vector<RegionDataset> parse_observations(const std::string& csv_text);

/// As parse_observations for `scenario,region,feature,year,value` rows,
/// additionally validating scenario labels against SSP1..SSP5.
std::vector<ScenarioProjection> parse_projections(const std::string& csv_text);

/// Canonical form: rows sorted by (region, feature, year), values printed
/// with 6 decimal places, LF line endings.
std::string serialize_observations(const std::vector<RegionDataset>& datasets);

/// Canonical form: rows sorted by (scenario, region, feature, year).
std::string serialize_projections(const std::vector<ScenarioProjection>& projections);

/**
 * Parses a weights file. Each data row is `name,weight` where name is
 * either a group label (economic, environmental, other) applying to every
 * member feature, or a feature name; feature rows override group rows.
 * An optional header row whose second field is literally "weight" is
 * skipped. `features` supplies the feature universe for group expansion;
 * names outside it that are not groups are rejected.
 */
WeightScheme parse_weights(const std::string& csv_text,
                           const std::vector<FeatureKey>& features);

}  // namespace sspalign
