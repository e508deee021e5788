#include "sspalign/normalize.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sspalign/errors.hpp"

namespace sspalign {

NormalizationStats compute_normalization(
    const std::vector<ScenarioProjection>& projections, YearWindow window) {
  // Pool in-window values per (region, feature) across all scenarios.
  std::map<std::pair<std::string, std::string>, std::vector<double>> pooled;
  for (const ScenarioProjection& proj : projections) {
    for (const auto& [feature, series] : proj.series) {
      auto& bucket = pooled[{proj.region, feature}];
      for (const TimePoint& p : series.points) {
        if (window.contains(p.year)) bucket.push_back(p.value);
      }
    }
  }

  NormalizationStats stats;
  stats.source = NormalizationStats::Source::pooled_projections;
  for (const auto& [key, values] : pooled) {
    if (values.empty()) {
      throw Error(Errc::missing_coverage,
                  "no projection values for (" + key.first + ", " + key.second +
                      ") inside window " + window.str());
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(values.size());
    NormalizationStats::Entry entry;
    entry.mean = mean;
    entry.std = std::max(std::sqrt(var), NormalizationStats::kStdFloor);
    stats.entries[key] = entry;
  }
  return stats;
}

namespace {

const NormalizationStats::Entry& entry_or_throw(const NormalizationStats& stats,
                                                const std::string& region,
                                                const std::string& feature) {
  const NormalizationStats::Entry* entry = stats.find(region, feature);
  if (entry == nullptr) {
    throw Error(Errc::missing_stats,
                "no normalization stats for (" + region + ", " + feature + ")");
  }
  return *entry;
}

}  // namespace

TimeSeries normalize(const TimeSeries& series, const NormalizationStats& stats,
                     const std::string& region) {
  const auto& entry = entry_or_throw(stats, region, series.feature.name);
  TimeSeries out = series;
  for (TimePoint& p : out.points) p.value = (p.value - entry.mean) / entry.std;
  return out;
}

TimeSeries denormalize(const TimeSeries& series, const NormalizationStats& stats,
                       const std::string& region) {
  const auto& entry = entry_or_throw(stats, region, series.feature.name);
  TimeSeries out = series;
  for (TimePoint& p : out.points) p.value = p.value * entry.std + entry.mean;
  return out;
}

}  // namespace sspalign
