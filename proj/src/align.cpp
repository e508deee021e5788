#include "sspalign/align.hpp"

#include <algorithm>
#include <set>

#include "sspalign/errors.hpp"
#include "sspalign/normalize.hpp"

namespace sspalign {

std::vector<int> AlignedPair::common_years() const {
  if (features.empty()) return {};
  std::vector<int> years;
  for (const TimePoint& p : features.front().observation.points) years.push_back(p.year);
  for (std::size_t i = 1; i < features.size(); ++i) {
    const TimeSeries& obs = features[i].observation;
    std::erase_if(years, [&obs](int y) { return !obs.has_year(y); });
  }
  return years;
}

std::vector<std::string> AlignedPair::feature_names() const {
  std::vector<std::string> names;
  names.reserve(features.size());
  for (const FeaturePair& fp : features) names.push_back(fp.feature.name);
  return names;
}

TimeSeries resample_projection(const TimeSeries& projection,
                               const std::vector<int>& target_years) {
  if (projection.points.empty()) {
    throw Error(Errc::empty_input, "projection for '" + projection.feature.name + "' is empty");
  }
  TimeSeries out;
  out.feature = projection.feature;
  out.points.reserve(target_years.size());

  const auto& pts = projection.points;
  for (int year : target_years) {
    if (year < pts.front().year || year > pts.back().year) {
      throw Error(Errc::extrapolation_required,
                  "target year " + std::to_string(year) + " outside projection coverage " +
                      std::to_string(pts.front().year) + ".." + std::to_string(pts.back().year) +
                      " for feature '" + projection.feature.name + "'");
    }
    auto upper = std::lower_bound(
        pts.begin(), pts.end(), year,
        [](const TimePoint& p, int y) { return p.year < y; });
    if (upper->year == year) {
      out.points.push_back({year, upper->value});
      continue;
    }
    const TimePoint& hi = *upper;
    const TimePoint& lo = *(upper - 1);
    const double t = static_cast<double>(year - lo.year) / static_cast<double>(hi.year - lo.year);
    out.points.push_back({year, lo.value + t * (hi.value - lo.value)});
  }
  return out;
}

std::vector<AlignedPair> build_aligned_pairs(
    const RegionDataset& observations,
    const std::vector<ScenarioProjection>& projections, YearWindow window,
    bool apply_normalization) {
  std::vector<const ScenarioProjection*> region_projections;
  for (const ScenarioProjection& proj : projections) {
    if (proj.region == observations.region) region_projections.push_back(&proj);
  }
  std::sort(region_projections.begin(), region_projections.end(),
            [](const ScenarioProjection* a, const ScenarioProjection* b) {
              return a->scenario < b->scenario;
            });

  NormalizationStats stats;
  if (apply_normalization) {
    stats = compute_normalization(projections, window);
  }

  std::vector<AlignedPair> pairs;
  pairs.reserve(region_projections.size());
  for (const ScenarioProjection* proj : region_projections) {
    AlignedPair pair;
    pair.region = observations.region;
    pair.scenario = proj->scenario;
    pair.normalized = apply_normalization;

    for (const auto& [feature, obs_series] : observations.series) {
      TimeSeries obs_window;
      obs_window.feature = obs_series.feature;
      for (const TimePoint& p : obs_series.points) {
        if (window.contains(p.year)) obs_window.points.push_back(p);
      }
      if (obs_window.points.empty()) {
        throw Error(Errc::missing_coverage,
                    "region '" + observations.region + "' feature '" + feature +
                        "' has no observations inside window " + window.str());
      }

      auto proj_it = proj->series.find(feature);
      if (proj_it == proj->series.end()) {
        throw Error(Errc::missing_feature,
                    std::string("scenario ") + scenario_label(proj->scenario) +
                        " lacks feature '" + feature + "' for region '" +
                        observations.region + "'");
      }
      std::vector<int> years;
      years.reserve(obs_window.points.size());
      for (const TimePoint& p : obs_window.points) years.push_back(p.year);

      TimeSeries proj_resampled;
      try {
        proj_resampled = resample_projection(proj_it->second, years);
      } catch (const Error& err) {
        if (err.code() != Errc::extrapolation_required) throw;
        throw Error(Errc::missing_coverage,
                    std::string("scenario ") + scenario_label(proj->scenario) +
                        " cannot cover the observation years: " + err.what());
      }

      if (apply_normalization) {
        obs_window = normalize(obs_window, stats, observations.region);
        proj_resampled = normalize(proj_resampled, stats, observations.region);
      }
      pair.features.push_back({obs_series.feature, std::move(obs_window),
                               std::move(proj_resampled)});
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace sspalign
