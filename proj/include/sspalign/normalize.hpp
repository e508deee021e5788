#pragma once

#include <vector>

#include "sspalign/types.hpp"

namespace sspalign {

/**
 * Computes per-(region, feature) z-scoring statistics by pooling the
 * projection values of every provided scenario inside the window.
 * Population std, floored at NormalizationStats::kStdFloor.
 *
 * Throws Errc::missing_coverage when a (region, feature) seen in any
 * scenario has no pooled values inside the window.
 */
NormalizationStats compute_normalization(
    const std::vector<ScenarioProjection>& projections, YearWindow window);

/// (v - mean) / std per point; years unchanged.
/// Throws Errc::missing_stats when stats lack the (region, feature) entry.
TimeSeries normalize(const TimeSeries& series, const NormalizationStats& stats,
                     const std::string& region);

/// Inverse of normalize with the same stats.
TimeSeries denormalize(const TimeSeries& series, const NormalizationStats& stats,
                       const std::string& region);

}  // namespace sspalign
