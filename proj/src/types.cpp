#include "sspalign/types.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>

#include "sspalign/errors.hpp"

namespace sspalign {

namespace {

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

const char* scenario_label(Scenario s) {
  switch (s) {
    case Scenario::SSP1: return "SSP1";
    case Scenario::SSP2: return "SSP2";
    case Scenario::SSP3: return "SSP3";
    case Scenario::SSP4: return "SSP4";
    case Scenario::SSP5: return "SSP5";
  }
  return "SSP?";
}

Scenario parse_scenario(const std::string& label, int line) {
  for (Scenario s : kAllScenarios) {
    if (label == scenario_label(s)) return s;
  }
  throw Error(Errc::unknown_scenario, "scenario '" + label + "' is not one of SSP1..SSP5",
              line);
}

const char* group_label(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::economic: return "economic";
    case FeatureGroup::environmental: return "environmental";
    case FeatureGroup::other: return "other";
  }
  return "other";
}

FeatureGroup infer_group(const std::string& feature_name) {
  const std::string name = ascii_lower(feature_name);
  if (name == "population" || name == "gdp") return FeatureGroup::economic;
  if (name == "temperature" || name == "precipitation" || name == "methane") {
    return FeatureGroup::environmental;
  }
  return FeatureGroup::other;
}

double TimeSeries::value_at(int year) const {
  for (const TimePoint& p : points) {
    if (p.year == year) return p.value;
  }
  throw Error(Errc::missing_coverage,
              "feature '" + feature.name + "' has no sample at year " + std::to_string(year));
}

bool TimeSeries::has_year(int year) const {
  return std::any_of(points.begin(), points.end(),
                     [year](const TimePoint& p) { return p.year == year; });
}

int TimeSeries::first_year() const {
  if (points.empty()) {
    throw Error(Errc::empty_input, "feature '" + feature.name + "' has no samples");
  }
  return points.front().year;
}

int TimeSeries::last_year() const {
  if (points.empty()) {
    throw Error(Errc::empty_input, "feature '" + feature.name + "' has no samples");
  }
  return points.back().year;
}

std::string YearWindow::str() const {
  return std::to_string(first) + ":" + std::to_string(last);
}

YearWindow parse_year_window(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 >= text.size()) {
    throw Error(Errc::invalid_config,
                "window must look like 2015:2022, got '" + text + "'");
  }
  auto parse_part = [&text](std::size_t begin, std::size_t end) {
    int year = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, year);
    if (ec != std::errc{} || ptr != text.data() + end) {
      throw Error(Errc::invalid_config, "cannot parse window '" + text + "'");
    }
    return year;
  };
  YearWindow window;
  window.first = parse_part(0, colon);
  window.last = parse_part(colon + 1, text.size());
  if (window.first > window.last) {
    throw Error(Errc::invalid_config,
                "window start exceeds window end in '" + text + "'");
  }
  return window;
}

double WeightScheme::at(const std::string& feature_name) const {
  auto it = weights.find(feature_name);
  if (it == weights.end()) {
    throw Error(Errc::missing_weight, "no weight for feature '" + feature_name + "'");
  }
  if (!std::isfinite(it->second) || it->second < 0.0) {
    throw Error(Errc::invalid_weight,
                "weight for feature '" + feature_name + "' must be finite and nonnegative");
  }
  return it->second;
}

WeightScheme equal_weights(const std::vector<std::string>& feature_names) {
  WeightScheme scheme;
  for (const std::string& name : feature_names) scheme.weights[name] = 1.0;
  return scheme;
}

const NormalizationStats::Entry* NormalizationStats::find(
    const std::string& region, const std::string& feature) const {
  auto it = entries.find({region, feature});
  return it == entries.end() ? nullptr : &it->second;
}

const char* method_label(ScoreMethod m) {
  switch (m) {
    case ScoreMethod::norm: return "norm";
    case ScoreMethod::trace: return "trace";
    case ScoreMethod::classifier: return "classifier";
    case ScoreMethod::ensemble: return "ensemble";
  }
  return "?";
}

ScoreMethod parse_method_label(const std::string& label) {
  if (label == "norm") return ScoreMethod::norm;
  if (label == "trace") return ScoreMethod::trace;
  if (label == "classifier") return ScoreMethod::classifier;
  if (label == "ensemble") return ScoreMethod::ensemble;
  throw Error(Errc::invalid_config, "unknown score method '" + label + "'");
}

const char* orientation_label(Orientation o) {
  return o == Orientation::lower_better ? "lower_better" : "higher_better";
}

Orientation parse_orientation_label(const std::string& label) {
  if (label == "lower_better") return Orientation::lower_better;
  if (label == "higher_better") return Orientation::higher_better;
  throw Error(Errc::invalid_config, "unknown orientation '" + label + "'");
}

Orientation orientation_for(ScoreMethod m) {
  return m == ScoreMethod::norm ? Orientation::lower_better : Orientation::higher_better;
}

ScoreMatrix ScoreMatrix::make(ScoreMethod method, std::map<Key, double> entries,
                              std::string config_fingerprint) {
  return make(method, orientation_for(method), std::move(entries),
              std::move(config_fingerprint));
}

ScoreMatrix ScoreMatrix::make(ScoreMethod method, Orientation orientation,
                              std::map<Key, double> entries,
                              std::string config_fingerprint) {
  if (orientation != orientation_for(method)) {
    throw Error(Errc::invalid_config,
                std::string("method '") + method_label(method) + "' requires orientation '" +
                    orientation_label(orientation_for(method)) + "'");
  }
  for (const auto& [key, value] : entries) {
    if (!std::isfinite(value)) {
      throw Error(Errc::non_finite_value,
                  "score for (" + key.first + ", " + scenario_label(key.second) +
                      ") is not finite");
    }
  }
  ScoreMatrix m;
  m.method = method;
  m.orientation = orientation;
  m.entries = std::move(entries);
  m.config_fingerprint = std::move(config_fingerprint);
  return m;
}

std::vector<std::string> ScoreMatrix::regions() const {
  std::vector<std::string> out;
  for (const auto& [key, value] : entries) {
    if (out.empty() || out.back() != key.first) out.push_back(key.first);
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  // avoid the two representations of zero leaking into artifacts
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

}  // namespace sspalign
