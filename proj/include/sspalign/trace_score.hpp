#pragma once

#include <span>
#include <string>
#include <vector>

#include "sspalign/align.hpp"
#include "sspalign/types.hpp"

namespace sspalign {

/**
 * @brief Which projection point serves as a step's pursuit target.
 *
 * same_year: the projection at the state's own year. next_year: the
 * projection at the following grid year. horizon: the projection at one
 * fixed grid year.
 */
struct TargetPolicy {
  enum class Kind : std::uint8_t { same_year, next_year, horizon };

  Kind kind = Kind::same_year;
  int horizon_year = 0;  // meaningful for Kind::horizon only

  std::string str() const;
};

TargetPolicy parse_target_policy(const std::string& text);

/**
 * @brief Trajectory-counterfactual scoring parameters.
 */
struct TraceConfig {
  double lambda = 0.9;  // in [0, 1]
  TargetPolicy target_policy;
  WeightScheme feature_weights;
};

/// Observed state and its pursuit target in normalized feature space,
/// with one fixed feature ordering shared across states.
struct TrajectoryState {
  int year = 0;
  std::vector<double> x;
  std::vector<double> x_target;
};

/// The two bounded metrics combined by a step score.
struct StepBreakdown {
  double angle = 0.0;     // R1: weighted cosine between step and goal vectors
  double distance = 0.0;  // R2: normalized change in distance to target
  double score = 0.0;     // lambda * R1 + (1 - lambda) * R2
};

/**
 * Scores one step of the observed trajectory against its target, in
 * [-1, 1]. Weights are scaled to sum 1 over `features`, which names the
 * vector dimensions in order.
 *
 * Degenerate cases: a zero step or zero goal vector contributes no angle
 * signal (R1 = 0); when both distances to target vanish the step is
 * perfect tracking (R2 = 1).
 */
StepBreakdown step_score_detail(const TrajectoryState& prev, const TrajectoryState& curr,
                                const TraceConfig& config,
                                std::span<const std::string> features);

double step_score(const TrajectoryState& prev, const TrajectoryState& curr,
                  const TraceConfig& config, std::span<const std::string> features);

struct YearStep {
  int year = 0;  // the step's destination year
  double score = 0.0;
};

/**
 * @brief Per-step scores and their mean for one (region, scenario).
 */
struct TraceResult {
  std::vector<YearStep> steps;
  double mean = 0.0;
  std::string config_fingerprint;
};

/**
 * Builds one state per year common to every feature grid, selects targets
 * per the policy, and scores each consecutive pair of states.
 *
 * Throws Errc::insufficient_years when fewer than two scoreable states
 * exist and Errc::target_outside_coverage when the horizon year is not on
 * the common grid.
 */
TraceResult trace_trajectory(const AlignedPair& pair, const TraceConfig& config);

/**
 * Grid search over lambda in {0, 0.05, ..., 1} maximizing the Spearman
 * rank correlation between per-(region, scenario) mean scores and a
 * reference matrix (negated first when the reference is lower-better).
 * Ties, including an all-undefined correlation landscape, resolve toward
 * the 0.9 default.
 */
double calibrate_lambda(const std::vector<AlignedPair>& pairs, const ScoreMatrix& reference,
                        const TraceConfig& base_config);

}  // namespace sspalign
