#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sspalign {

/**
 * @brief The five Shared Socioeconomic Pathway scenarios.
 */
enum class Scenario : std::uint8_t { SSP1, SSP2, SSP3, SSP4, SSP5 };

inline constexpr std::array<Scenario, 5> kAllScenarios = {
    Scenario::SSP1, Scenario::SSP2, Scenario::SSP3, Scenario::SSP4,
    Scenario::SSP5};

/// "SSP1".."SSP5".
const char* scenario_label(Scenario s);

/// Strict parse of an SSP label; throws Errc::unknown_scenario otherwise.
Scenario parse_scenario(const std::string& label, int line = 0);

/**
 * @brief Feature category used for grouped weighting.
 */
enum class FeatureGroup : std::uint8_t { economic, environmental, other };

const char* group_label(FeatureGroup g);

/**
 * @brief Identity of one measured feature.
 *
 * `name` is the key used everywhere; `unit` is a free-text label and
 * `group` drives group-level weight expansion.
 */
struct FeatureKey {
  std::string name;
  std::string unit;
  FeatureGroup group = FeatureGroup::other;
};

/// Group for a canonical feature name ("gdp" -> economic, "methane" ->
/// environmental, ...); other for names outside the canonical five.
/// Matching is ASCII case-insensitive.
FeatureGroup infer_group(const std::string& feature_name);

struct TimePoint {
  int year = 0;
  double value = 0.0;
};

/**
 * @brief One feature's samples for one region (and optionally one scenario).
 *
 * Invariants (checked by validate_dataset, enforced by the parsers):
 * strictly increasing years, finite values, at least one point.
 */
struct TimeSeries {
  FeatureKey feature;
  std::vector<TimePoint> points;

  /// Value at an exact grid year; throws Errc::missing_coverage if absent.
  double value_at(int year) const;
  bool has_year(int year) const;
  int first_year() const;
  int last_year() const;
};

/**
 * @brief All observed series for one region, keyed by feature name.
 */
struct RegionDataset {
  std::string region;
  std::map<std::string, TimeSeries> series;
};

/**
 * @brief One scenario's projected series for one region.
 */
struct ScenarioProjection {
  Scenario scenario = Scenario::SSP1;
  std::string region;
  std::map<std::string, TimeSeries> series;
};

/// Inclusive analysis year range.
struct YearWindow {
  int first = 2015;
  int last = 2022;

  bool contains(int year) const { return year >= first && year <= last; }
  std::string str() const;
};

/// Parses "<first>:<last>"; throws Errc::invalid_config on bad syntax or
/// an inverted range.
YearWindow parse_year_window(const std::string& text);

/**
 * @brief Per-feature nonnegative weights.
 *
 * Scorers require an entry for every participating feature (a missing
 * entry is an error, never an implicit zero) and at least one strictly
 * positive weight among them.
 */
struct WeightScheme {
  std::map<std::string, double> weights;

  /// Weight for a feature; throws Errc::missing_weight if absent and
  /// Errc::invalid_weight if negative or non-finite.
  double at(const std::string& feature_name) const;
};

/// Unit weight for every feature name given.
WeightScheme equal_weights(const std::vector<std::string>& feature_names);

/**
 * @brief Z-scoring statistics per (region, feature).
 *
 * std is floored at kStdFloor so normalization never divides by zero.
 */
struct NormalizationStats {
  static constexpr double kStdFloor = 1e-9;

  enum class Source : std::uint8_t { pooled_projections, external };

  struct Entry {
    double mean = 0.0;
    double std = kStdFloor;
  };

  Source source = Source::pooled_projections;
  std::map<std::pair<std::string, std::string>, Entry> entries;

  const Entry* find(const std::string& region,
                    const std::string& feature) const;
};

/**
 * @brief Score family produced by one method.
 */
enum class ScoreMethod : std::uint8_t { norm, trace, classifier, ensemble };

const char* method_label(ScoreMethod m);
ScoreMethod parse_method_label(const std::string& label);

/// Whether lower or higher values mean closer SSP alignment.
enum class Orientation : std::uint8_t { lower_better, higher_better };

const char* orientation_label(Orientation o);
Orientation parse_orientation_label(const std::string& label);

/// Orientation is fixed by method: norm scores are lower-better, all other
/// families are higher-better.
Orientation orientation_for(ScoreMethod m);

/**
 * @brief (region, scenario) grid of scores from one method.
 *
 * Construct through make(); it rejects method/orientation mismatches and
 * non-finite entries.
 */
struct ScoreMatrix {
  using Key = std::pair<std::string, Scenario>;

  ScoreMethod method = ScoreMethod::norm;
  Orientation orientation = Orientation::lower_better;
  std::map<Key, double> entries;
  std::string config_fingerprint;

  static ScoreMatrix make(ScoreMethod method, std::map<Key, double> entries,
                          std::string config_fingerprint);
  static ScoreMatrix make(ScoreMethod method, Orientation orientation,
                          std::map<Key, double> entries,
                          std::string config_fingerprint);

  /// Sorted distinct regions present in the matrix.
  std::vector<std::string> regions() const;
};

/// FNV-1a 64-bit digest of a byte string, as 16 lowercase hex chars.
/// Used for configuration fingerprints and input-file digests.
std::string fnv1a_hex(const std::string& bytes);

/// Fixed 6-decimal formatting used in every emitted artifact.
std::string format_fixed6(double value);

}  // namespace sspalign
