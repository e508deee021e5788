#include "sspalign/norm_score.hpp"

#include <cmath>
#include <set>

#include "sspalign/errors.hpp"

namespace sspalign {

namespace {

double weight_aggregate(const std::vector<double>& weights, WeightDenominator denominator) {
  double aggregate = 0.0;
  if (denominator == WeightDenominator::l2) {
    for (double w : weights) aggregate += w * w;
    aggregate = std::sqrt(aggregate);
  } else {
    for (double w : weights) aggregate += w;
  }
  return aggregate;
}

}  // namespace

ErrorSeries make_error_series(const FeaturePair& pair) {
  ErrorSeries out;
  out.feature = pair.feature;
  out.errors.reserve(pair.observation.points.size());
  for (std::size_t i = 0; i < pair.observation.points.size(); ++i) {
    out.errors.push_back(pair.observation.points[i].value - pair.projection.points[i].value);
  }
  return out;
}

double feature_measure(const ErrorSeries& errors) {
  if (errors.errors.empty()) {
    throw Error(Errc::empty_input,
                "error series for '" + errors.feature.name + "' has no points");
  }
  double sum_sq = 0.0;
  for (double e : errors.errors) sum_sq += e * e;
  return std::sqrt(sum_sq) / static_cast<double>(errors.errors.size());
}

NormScoreBreakdown norm_score(const AlignedPair& pair, const WeightScheme& weights,
                              WeightDenominator denominator) {
  if (pair.features.empty()) {
    throw Error(Errc::empty_input, "aligned pair has no features");
  }
  NormScoreBreakdown breakdown;
  breakdown.denominator = denominator;

  std::vector<double> used_weights;
  double weighted_sum = 0.0;
  for (const FeaturePair& fp : pair.features) {
    const double w = weights.at(fp.feature.name);
    const double measure = feature_measure(make_error_series(fp));
    breakdown.per_feature[fp.feature.name] = measure;
    breakdown.weights.weights[fp.feature.name] = w;
    used_weights.push_back(w);
    weighted_sum += w * measure;
  }

  const double aggregate = weight_aggregate(used_weights, denominator);
  if (aggregate <= 0.0) {
    throw Error(Errc::all_zero_weights, "at least one participating weight must be positive");
  }
  breakdown.total = weighted_sum / aggregate;
  return breakdown;
}

std::vector<YearScore> norm_score_over_time(const AlignedPair& pair,
                                            const WeightScheme& weights,
                                            WeightDenominator denominator) {
  if (pair.features.empty()) {
    throw Error(Errc::empty_input, "aligned pair has no features");
  }
  std::set<int> years;
  for (const FeaturePair& fp : pair.features) {
    for (const TimePoint& p : fp.observation.points) years.insert(p.year);
  }

  std::vector<YearScore> out;
  out.reserve(years.size());
  for (int year : years) {
    std::vector<double> used_weights;
    double weighted_sum = 0.0;
    for (const FeaturePair& fp : pair.features) {
      if (!fp.observation.has_year(year)) continue;
      const double w = weights.at(fp.feature.name);
      const double error = fp.observation.value_at(year) - fp.projection.value_at(year);
      used_weights.push_back(w);
      weighted_sum += w * std::abs(error);
    }
    if (used_weights.empty()) continue;
    const double aggregate = weight_aggregate(used_weights, denominator);
    if (aggregate <= 0.0) {
      throw Error(Errc::all_zero_weights,
                  "all weights are zero for year " + std::to_string(year));
    }
    out.push_back({year, weighted_sum / aggregate});
  }
  return out;
}

}  // namespace sspalign
