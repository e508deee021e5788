#pragma once

#include <vector>

#include "sspalign/types.hpp"

namespace sspalign {

/// Observation and projection series for one feature on an identical
/// year grid.
struct FeaturePair {
  FeatureKey feature;
  TimeSeries observation;
  TimeSeries projection;
};

/**
 * @brief Observation-vs-projection pairs for one (region, scenario).
 *
 * Grids match per feature; grids of different features may differ.
 */
struct AlignedPair {
  std::string region;
  Scenario scenario = Scenario::SSP1;
  std::vector<FeaturePair> features;  // sorted by feature name
  bool normalized = false;

  /// Sorted years present in every feature's grid.
  std::vector<int> common_years() const;
  /// Sorted feature names.
  std::vector<std::string> feature_names() const;
};

/**
 * Linear interpolation of a projection onto target years. Exact grid
 * years pass through unchanged (bit-exact). Throws
 * Errc::extrapolation_required when a target year falls outside the
 * projection's coverage.
 */
TimeSeries resample_projection(const TimeSeries& projection,
                               const std::vector<int>& target_years);

/**
 * Builds one AlignedPair per scenario projection of the observation's
 * region: the observation is restricted to the window, the projection is
 * resampled onto the observation years per feature, and (when requested)
 * both sides are z-scored with pooled-projection statistics.
 *
 * Throws Errc::missing_feature when a scenario lacks an observed feature
 * and Errc::missing_coverage when a feature has no observation inside the
 * window or the projection cannot span the observation years.
 */
std::vector<AlignedPair> build_aligned_pairs(
    const RegionDataset& observations,
    const std::vector<ScenarioProjection>& projections, YearWindow window,
    bool apply_normalization);

}  // namespace sspalign
