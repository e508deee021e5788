#include "sspalign/trace_score.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "sspalign/errors.hpp"
#include "sspalign/ranking.hpp"

namespace sspalign {

std::string TargetPolicy::str() const {
  switch (kind) {
    case Kind::same_year: return "same-year";
    case Kind::next_year: return "next-year";
    case Kind::horizon: return "horizon:" + std::to_string(horizon_year);
  }
  return "?";
}

TargetPolicy parse_target_policy(const std::string& text) {
  if (text == "same-year") return {TargetPolicy::Kind::same_year, 0};
  if (text == "next-year") return {TargetPolicy::Kind::next_year, 0};
  if (text.rfind("horizon:", 0) == 0) {
    const std::string year_text = text.substr(8);
    int year = 0;
    const char* begin = year_text.data();
    const char* end = begin + year_text.size();
    auto [ptr, ec] = std::from_chars(begin, end, year);
    if (ec != std::errc{} || ptr != end) {
      throw Error(Errc::invalid_config, "cannot parse horizon year in '" + text + "'");
    }
    return {TargetPolicy::Kind::horizon, year};
  }
  throw Error(Errc::invalid_config,
              "target policy must be same-year, next-year, or horizon:<year>, got '" + text +
                  "'");
}

namespace {

struct WeightedSpace {
  std::vector<double> weights;  // scaled to sum 1

  double inner(std::span<const double> a, std::span<const double> b) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * a[i] * b[i];
    return sum;
  }

  double norm(std::span<const double> v) const { return std::sqrt(inner(v, v)); }

  double distance(std::span<const double> a, std::span<const double> b) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const double d = a[i] - b[i];
      sum += weights[i] * d * d;
    }
    return std::sqrt(sum);
  }
};

WeightedSpace resolve_weights(const WeightScheme& scheme,
                              std::span<const std::string> features) {
  WeightedSpace space;
  space.weights.reserve(features.size());
  double total = 0.0;
  for (const std::string& name : features) {
    const double w = scheme.at(name);
    space.weights.push_back(w);
    total += w;
  }
  if (total <= 0.0) {
    throw Error(Errc::all_zero_weights, "at least one feature weight must be positive");
  }
  for (double& w : space.weights) w /= total;
  return space;
}

std::vector<double> subtract(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

}  // namespace

StepBreakdown step_score_detail(const TrajectoryState& prev, const TrajectoryState& curr,
                                const TraceConfig& config,
                                std::span<const std::string> features) {
  const std::size_t dim = features.size();
  if (prev.x.size() != dim || prev.x_target.size() != dim || curr.x.size() != dim ||
      curr.x_target.size() != dim) {
    throw Error(Errc::dimension_mismatch,
                "states and feature list disagree on dimension " + std::to_string(dim));
  }
  if (dim == 0) {
    throw Error(Errc::dimension_mismatch, "states need at least one feature");
  }
  if (config.lambda < 0.0 || config.lambda > 1.0) {
    throw Error(Errc::invalid_config, "lambda must lie in [0, 1]");
  }
  const WeightedSpace space = resolve_weights(config.feature_weights, features);

  const std::vector<double> step = subtract(curr.x, prev.x);
  const std::vector<double> goal = subtract(curr.x_target, prev.x);

  StepBreakdown out;
  const double step_norm = space.norm(step);
  const double goal_norm = space.norm(goal);
  if (step_norm > 0.0 && goal_norm > 0.0) {
    out.angle = clamp_unit(space.inner(step, goal) / (step_norm * goal_norm));
  } else {
    out.angle = 0.0;  // no directional evidence
  }

  const double dist_prev = space.distance(prev.x, prev.x_target);
  const double dist_curr = space.distance(curr.x, curr.x_target);
  if (dist_prev + dist_curr > 0.0) {
    out.distance = clamp_unit((dist_prev - dist_curr) / (dist_prev + dist_curr));
  } else {
    out.distance = 1.0;  // on target at both steps
  }

  out.score = config.lambda * out.angle + (1.0 - config.lambda) * out.distance;
  return out;
}

double step_score(const TrajectoryState& prev, const TrajectoryState& curr,
                  const TraceConfig& config, std::span<const std::string> features) {
  return step_score_detail(prev, curr, config, features).score;
}

namespace {

std::vector<TrajectoryState> build_states(const AlignedPair& pair,
                                          const TargetPolicy& policy) {
  const std::vector<int> years = pair.common_years();
  if (years.size() < 2) {
    throw Error(Errc::insufficient_years,
                "trajectory scoring needs at least 2 common years, region '" + pair.region +
                    "' has " + std::to_string(years.size()));
  }

  // The years whose states carry a target under this policy.
  std::size_t state_count = years.size();
  if (policy.kind == TargetPolicy::Kind::next_year) {
    state_count = years.size() - 1;
    if (state_count < 2) {
      throw Error(Errc::insufficient_years,
                  "next-year targets need at least 3 common years, region '" + pair.region +
                      "' has " + std::to_string(years.size()));
    }
  } else if (policy.kind == TargetPolicy::Kind::horizon) {
    if (!std::binary_search(years.begin(), years.end(), policy.horizon_year)) {
      throw Error(Errc::target_outside_coverage,
                  "horizon year " + std::to_string(policy.horizon_year) +
                      " is not on the common grid of region '" + pair.region + "'");
    }
  }

  std::vector<TrajectoryState> states;
  states.reserve(state_count);
  for (std::size_t i = 0; i < state_count; ++i) {
    TrajectoryState state;
    state.year = years[i];
    int target_year = years[i];
    if (policy.kind == TargetPolicy::Kind::next_year) {
      target_year = years[i + 1];
    } else if (policy.kind == TargetPolicy::Kind::horizon) {
      target_year = policy.horizon_year;
    }
    for (const FeaturePair& fp : pair.features) {
      state.x.push_back(fp.observation.value_at(state.year));
      state.x_target.push_back(fp.projection.value_at(target_year));
    }
    states.push_back(std::move(state));
  }
  return states;
}

}  // namespace

TraceResult trace_trajectory(const AlignedPair& pair, const TraceConfig& config) {
  const std::vector<std::string> features = pair.feature_names();
  const std::vector<TrajectoryState> states = build_states(pair, config.target_policy);

  TraceResult result;
  result.steps.reserve(states.size() - 1);
  double sum = 0.0;
  for (std::size_t i = 1; i < states.size(); ++i) {
    const double score = step_score(states[i - 1], states[i], config, features);
    result.steps.push_back({states[i].year, score});
    sum += score;
  }
  result.mean = sum / static_cast<double>(result.steps.size());
  return result;
}

double calibrate_lambda(const std::vector<AlignedPair>& pairs, const ScoreMatrix& reference,
                        const TraceConfig& base_config) {
  if (pairs.empty()) {
    throw Error(Errc::empty_input, "lambda calibration needs at least one aligned pair");
  }

  // Mean angle/distance metrics per pair; the mean score is linear in
  // lambda, so each candidate needs no re-walk of the trajectories.
  std::vector<double> mean_angle;
  std::vector<double> mean_distance;
  std::vector<double> reference_values;
  for (const AlignedPair& pair : pairs) {
    const std::vector<std::string> features = pair.feature_names();
    const std::vector<TrajectoryState> states = build_states(pair, base_config.target_policy);
    double angle_sum = 0.0;
    double distance_sum = 0.0;
    for (std::size_t i = 1; i < states.size(); ++i) {
      const StepBreakdown detail =
          step_score_detail(states[i - 1], states[i], base_config, features);
      angle_sum += detail.angle;
      distance_sum += detail.distance;
    }
    const double steps = static_cast<double>(states.size() - 1);
    mean_angle.push_back(angle_sum / steps);
    mean_distance.push_back(distance_sum / steps);

    auto it = reference.entries.find({pair.region, pair.scenario});
    if (it == reference.entries.end()) {
      throw Error(Errc::coverage_mismatch,
                  std::string("reference matrix lacks (") + pair.region + ", " +
                      scenario_label(pair.scenario) + ")");
    }
    const double sign = reference.orientation == Orientation::lower_better ? -1.0 : 1.0;
    reference_values.push_back(sign * it->second);
  }

  double best_lambda = 0.9;
  std::optional<double> best_correlation;
  for (int i = 0; i <= 20; ++i) {
    const double lambda = static_cast<double>(i) / 20.0;
    std::vector<double> means(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      means[k] = lambda * mean_angle[k] + (1.0 - lambda) * mean_distance[k];
    }
    const std::optional<double> correlation = spearman_correlation(means, reference_values);
    if (!correlation) continue;
    const bool better =
        !best_correlation || *correlation > *best_correlation ||
        (*correlation == *best_correlation &&
         std::abs(lambda - 0.9) < std::abs(best_lambda - 0.9));
    if (better) {
      best_correlation = correlation;
      best_lambda = lambda;
    }
  }
  return best_lambda;  // 0.9 when every candidate was undefined
}

}  // namespace sspalign
