#pragma once

#include <string>
#include <vector>

#include "sspalign/norm_score.hpp"
#include "sspalign/types.hpp"

namespace sspalign {

/// JSON document for one score matrix: method, orientation, window,
/// config_fingerprint, entries (region-then-scenario sorted).
std::string score_matrix_to_json(const ScoreMatrix& matrix, YearWindow window);

/// Inverse of score_matrix_to_json; validates method/orientation
/// consistency and entry finiteness. `window_out` may be null.
ScoreMatrix score_matrix_from_json(const std::string& json_text, YearWindow* window_out);

/// Wide CSV matrix (region x SSP1..SSP5) with a `#` metadata preamble.
std::string score_matrix_to_csv(const ScoreMatrix& matrix, YearWindow window);

/// Per-year norm score series for one region, one column per scenario.
/// Every series must share one year grid. The `#` preamble carries the
/// region and the run's config fingerprint.
std::string norm_over_time_csv(
    const std::string& region,
    const std::vector<std::pair<Scenario, std::vector<YearScore>>>& series,
    const std::string& config_fingerprint);

struct NormOverTimeTable {
  std::string region;
  std::string config_fingerprint;
  std::vector<int> years;
  std::vector<std::pair<Scenario, std::vector<double>>> columns;
};

NormOverTimeTable norm_over_time_from_csv(const std::string& csv_text);

/// One named input file recorded by content digest.
struct InputDigest {
  std::string name;  // basename, never a full path
  std::string digest;
};

/// Provenance document: tool version, input digests, and a full echo of
/// the configuration keyed by CLI flag names.
std::string provenance_json(const std::vector<InputDigest>& inputs,
                            const std::vector<std::pair<std::string, std::string>>& config_echo,
                            const std::string& fingerprint);

}  // namespace sspalign
