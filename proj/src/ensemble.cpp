#include "sspalign/ensemble.hpp"

#include <algorithm>

#include "sspalign/errors.hpp"
#include "sspalign/ranking.hpp"

namespace sspalign {

std::map<ScoreMatrix::Key, double> to_alignment_ranks(const ScoreMatrix& matrix) {
  std::map<ScoreMatrix::Key, double> ranks;
  for (const std::string& region : matrix.regions()) {
    std::vector<double> values;
    values.reserve(kAllScenarios.size());
    for (Scenario s : kAllScenarios) {
      auto it = matrix.entries.find({region, s});
      if (it == matrix.entries.end()) {
        throw Error(Errc::incomplete_region,
                    "region '" + region + "' lacks a " + scenario_label(s) + " score");
      }
      // flip higher-better values so that ascending ranks mean best first
      const double sign = matrix.orientation == Orientation::higher_better ? -1.0 : 1.0;
      values.push_back(sign * it->second);
    }
    const std::vector<double> region_ranks = average_ranks(values);
    for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
      ranks[{region, kAllScenarios[i]}] = region_ranks[i];
    }
  }
  return ranks;
}

ScoreMatrix ensemble(const std::vector<ScoreMatrix>& inputs) {
  if (inputs.size() < 2) {
    throw Error(Errc::invalid_config, "ensembling needs at least two input matrices");
  }
  for (std::size_t i = 1; i < inputs.size(); ++i) {
    if (inputs[i].entries.size() != inputs.front().entries.size() ||
        !std::equal(inputs[i].entries.begin(), inputs[i].entries.end(),
                    inputs.front().entries.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; })) {
      throw Error(Errc::coverage_mismatch,
                  "input matrices cover different (region, scenario) sets");
    }
  }

  // Ranks are exact multiples of 0.5, so summing before the one division
  // keeps the result bit-identical under input permutation.
  std::map<ScoreMatrix::Key, double> rank_sums;
  for (const ScoreMatrix& input : inputs) {
    for (const auto& [key, rank] : to_alignment_ranks(input)) {
      rank_sums[key] += rank;
    }
  }

  std::map<ScoreMatrix::Key, double> entries;
  for (const auto& [key, rank_sum] : rank_sums) {
    const double mean_rank = rank_sum / static_cast<double>(inputs.size());
    entries[key] = 1.0 - (mean_rank - 1.0) / 4.0;
  }

  // input-order independent fingerprint
  std::vector<std::string> fingerprints;
  fingerprints.reserve(inputs.size());
  for (const ScoreMatrix& input : inputs) fingerprints.push_back(input.config_fingerprint);
  std::sort(fingerprints.begin(), fingerprints.end());
  std::string combined = "ensemble";
  for (const std::string& fp : fingerprints) combined += "|" + fp;

  return ScoreMatrix::make(ScoreMethod::ensemble, std::move(entries), fnv1a_hex(combined));
}

}  // namespace sspalign
