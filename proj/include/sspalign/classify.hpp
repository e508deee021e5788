#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "sspalign/align.hpp"
#include "sspalign/types.hpp"

namespace sspalign {

/// Per-SSP membership probabilities for one region; sums to 1.
struct SspProbability {
  std::string region;
  std::map<Scenario, double> probs;
};

/// softmax(-distance / temperature), numerically shift-stable.
std::vector<double> softmax_probabilities(std::span<const double> distances,
                                          double temperature);

/**
 * Nearest-trajectory baseline: for each scenario, the mean over common
 * years of the weighted Euclidean distance between observation and
 * projection vectors (weights scaled to sum 1), softmaxed into
 * probabilities. Deterministic.
 *
 * Expects one aligned pair per scenario on normalized features; throws
 * Errc::missing_scenario when any of the five is absent and
 * Errc::non_positive_temperature for temperature <= 0.
 */
SspProbability classify(const std::vector<AlignedPair>& region_pairs,
                        const WeightScheme& weights, double temperature);

}  // namespace sspalign
