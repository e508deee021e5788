#pragma once

#include <map>
#include <vector>

#include "sspalign/align.hpp"
#include "sspalign/types.hpp"

namespace sspalign {

/// Per-feature observation-minus-projection errors on the feature's own
/// grid.
struct ErrorSeries {
  FeatureKey feature;
  std::vector<double> errors;
};

ErrorSeries make_error_series(const FeaturePair& pair);

/// Which weight aggregate divides the weighted sum: the Euclidean norm of
/// the weight vector (default) or the plain sum of the weights.
enum class WeightDenominator { l2, l1 };

/**
 * @brief One scored (region, scenario) pair with its per-feature view.
 */
struct NormScoreBreakdown {
  std::map<std::string, double> per_feature;  // feature name -> measure
  WeightScheme weights;                       // the entries actually used
  WeightDenominator denominator = WeightDenominator::l2;
  double total = 0.0;
};

/// Discrete error norm averaged over the feature's grid:
/// sqrt(sum of squared errors) / number of points.
double feature_measure(const ErrorSeries& errors);

/**
 * Weighted aggregation of the per-feature measures into one nonnegative
 * score: sum of w_i * measure_i over the pair's features, divided by the
 * weight aggregate. Zero exactly when every error is zero; lower is
 * better. Throws Errc::missing_weight / Errc::all_zero_weights.
 */
NormScoreBreakdown norm_score(const AlignedPair& pair, const WeightScheme& weights,
                              WeightDenominator denominator = WeightDenominator::l2);

struct YearScore {
  int year = 0;
  double score = 0.0;
};

/**
 * Score per year over the union of feature grids, each year evaluated
 * from the features observed that year only (singleton grids), with the
 * weight aggregate restricted to those features. Years with no features
 * are omitted.
 */
std::vector<YearScore> norm_score_over_time(
    const AlignedPair& pair, const WeightScheme& weights,
    WeightDenominator denominator = WeightDenominator::l2);

}  // namespace sspalign
