#include "sspalign/classify.hpp"

#include <algorithm>
#include <cmath>

#include "sspalign/errors.hpp"

namespace sspalign {

std::vector<double> softmax_probabilities(std::span<const double> distances,
                                          double temperature) {
  if (temperature <= 0.0 || !std::isfinite(temperature)) {
    throw Error(Errc::non_positive_temperature, "temperature must be positive");
  }
  if (distances.empty()) {
    throw Error(Errc::empty_input, "softmax needs at least one distance");
  }
  // logit = -d / T, shifted by the max logit
  const double min_distance = *std::min_element(distances.begin(), distances.end());
  std::vector<double> probs(distances.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < distances.size(); ++i) {
    probs[i] = std::exp(-(distances[i] - min_distance) / temperature);
    sum += probs[i];
  }
  for (double& p : probs) p /= sum;
  return probs;
}

namespace {

double mean_trajectory_distance(const AlignedPair& pair, const WeightScheme& weights) {
  const std::vector<int> years = pair.common_years();
  if (years.empty()) {
    throw Error(Errc::insufficient_years,
                "region '" + pair.region + "' has no year common to every feature");
  }
  std::vector<double> w;
  double total = 0.0;
  for (const FeaturePair& fp : pair.features) {
    w.push_back(weights.at(fp.feature.name));
    total += w.back();
  }
  if (total <= 0.0) {
    throw Error(Errc::all_zero_weights, "at least one feature weight must be positive");
  }
  for (double& wi : w) wi /= total;

  double distance_sum = 0.0;
  for (int year : years) {
    double sq = 0.0;
    for (std::size_t i = 0; i < pair.features.size(); ++i) {
      const double d = pair.features[i].observation.value_at(year) -
                       pair.features[i].projection.value_at(year);
      sq += w[i] * d * d;
    }
    distance_sum += std::sqrt(sq);
  }
  return distance_sum / static_cast<double>(years.size());
}

}  // namespace

SspProbability classify(const std::vector<AlignedPair>& region_pairs,
                        const WeightScheme& weights, double temperature) {
  if (temperature <= 0.0 || !std::isfinite(temperature)) {
    throw Error(Errc::non_positive_temperature, "temperature must be positive");
  }
  std::map<Scenario, const AlignedPair*> by_scenario;
  std::string region;
  for (const AlignedPair& pair : region_pairs) {
    by_scenario[pair.scenario] = &pair;
    if (region.empty()) {
      region = pair.region;
    } else if (region != pair.region) {
      throw Error(Errc::invalid_config,
                  "classification mixes regions '" + region + "' and '" + pair.region + "'");
    }
  }
  for (Scenario s : kAllScenarios) {
    if (!by_scenario.count(s)) {
      throw Error(Errc::missing_scenario,
                  std::string("no aligned pair for ") + scenario_label(s) + " in region '" +
                      region + "'");
    }
  }

  std::vector<double> distances;
  distances.reserve(kAllScenarios.size());
  for (Scenario s : kAllScenarios) {
    distances.push_back(mean_trajectory_distance(*by_scenario.at(s), weights));
  }
  const std::vector<double> probs = softmax_probabilities(distances, temperature);

  SspProbability out;
  out.region = region;
  for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
    out.probs[kAllScenarios[i]] = probs[i];
  }
  return out;
}

}  // namespace sspalign
