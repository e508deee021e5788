#include "sspalign/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "sspalign/errors.hpp"

namespace sspalign {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty() && current.back() == '\r') current.pop_back();
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

int parse_year(const std::string& text, int line) {
  int year = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, year);
  if (ec != std::errc{} || ptr != end) {
    throw Error(Errc::unparseable_number, "cannot parse year '" + text + "'", line);
  }
  return year;
}

double parse_value(const std::string& text, int line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(Errc::non_finite_value, "value '" + text + "' overflows a double", line);
  }
  if (ec != std::errc{} || ptr != end) {
    throw Error(Errc::unparseable_number, "cannot parse value '" + text + "'", line);
  }
  if (!std::isfinite(value)) {
    throw Error(Errc::non_finite_value, "value '" + text + "' is not finite", line);
  }
  return value;
}

void require_header(const std::vector<std::string>& lines, const std::string& expected) {
  if (lines.empty() || lines.front() != expected) {
    throw Error(Errc::malformed_header, "header must be exactly '" + expected + "'", 1);
  }
}

void append_point(std::map<std::string, TimeSeries>& series, const std::string& feature,
                  int year, double value) {
  auto it = series.find(feature);
  if (it == series.end()) {
    TimeSeries s;
    s.feature = FeatureKey{feature, "", infer_group(feature)};
    it = series.emplace(feature, std::move(s)).first;
  }
  it->second.points.push_back({year, value});
}

void sort_points(std::map<std::string, TimeSeries>& series) {
  for (auto& [name, s] : series) {
    std::sort(s.points.begin(), s.points.end(),
              [](const TimePoint& a, const TimePoint& b) { return a.year < b.year; });
  }
}

}  // namespace

std::vector<RegionDataset> parse_observations(const std::string& csv_text) {
  const auto lines = split_lines(csv_text);
  require_header(lines, "region,feature,year,value");

  std::map<std::string, RegionDataset> by_region;
  std::set<std::tuple<std::string, std::string, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 4) {
      throw Error(Errc::malformed_header,
                  "expected 4 fields, got " + std::to_string(fields.size()), line_no);
    }
    const std::string& region = fields[0];
    const std::string& feature = fields[1];
    if (region.empty()) {
      throw Error(Errc::unparseable_number, "empty region identifier", line_no);
    }
    if (feature.empty()) {
      throw Error(Errc::unparseable_number, "empty feature name", line_no);
    }
    const int year = parse_year(fields[2], line_no);
    const double value = parse_value(fields[3], line_no);
    if (!seen.insert({region, feature, year}).second) {
      throw Error(Errc::duplicate_key,
                  "duplicate (" + region + ", " + feature + ", " + std::to_string(year) + ")",
                  line_no);
    }
    RegionDataset& dataset = by_region[region];
    dataset.region = region;
    append_point(dataset.series, feature, year, value);
  }

  std::vector<RegionDataset> out;
  out.reserve(by_region.size());
  for (auto& [region, dataset] : by_region) {
    sort_points(dataset.series);
    out.push_back(std::move(dataset));
  }
  return out;
}

std::vector<ScenarioProjection> parse_projections(const std::string& csv_text) {
  const auto lines = split_lines(csv_text);
  require_header(lines, "scenario,region,feature,year,value");

  std::map<std::pair<Scenario, std::string>, ScenarioProjection> by_key;
  std::set<std::tuple<Scenario, std::string, std::string, int>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 5) {
      throw Error(Errc::malformed_header,
                  "expected 5 fields, got " + std::to_string(fields.size()), line_no);
    }
    const Scenario scenario = parse_scenario(fields[0], line_no);
    const std::string& region = fields[1];
    const std::string& feature = fields[2];
    if (region.empty()) {
      throw Error(Errc::unparseable_number, "empty region identifier", line_no);
    }
    if (feature.empty()) {
      throw Error(Errc::unparseable_number, "empty feature name", line_no);
    }
    const int year = parse_year(fields[3], line_no);
    const double value = parse_value(fields[4], line_no);
    if (!seen.insert({scenario, region, feature, year}).second) {
      throw Error(Errc::duplicate_key,
                  std::string("duplicate (") + scenario_label(scenario) + ", " + region + ", " +
                      feature + ", " + std::to_string(year) + ")",
                  line_no);
    }
    ScenarioProjection& proj = by_key[{scenario, region}];
    proj.scenario = scenario;
    proj.region = region;
    append_point(proj.series, feature, year, value);
  }

  std::vector<ScenarioProjection> out;
  out.reserve(by_key.size());
  for (auto& [key, proj] : by_key) {
    sort_points(proj.series);
    out.push_back(std::move(proj));
  }
  return out;
}

std::string serialize_observations(const std::vector<RegionDataset>& datasets) {
  std::vector<const RegionDataset*> sorted;
  sorted.reserve(datasets.size());
  for (const auto& d : datasets) sorted.push_back(&d);
  std::sort(sorted.begin(), sorted.end(),
            [](const RegionDataset* a, const RegionDataset* b) { return a->region < b->region; });

  std::string out = "region,feature,year,value\n";
  for (const RegionDataset* dataset : sorted) {
    for (const auto& [feature, series] : dataset->series) {
      for (const TimePoint& p : series.points) {
        out += dataset->region + "," + feature + "," + std::to_string(p.year) + "," +
               format_fixed6(p.value) + "\n";
      }
    }
  }
  return out;
}

std::string serialize_projections(const std::vector<ScenarioProjection>& projections) {
  std::vector<const ScenarioProjection*> sorted;
  sorted.reserve(projections.size());
  for (const auto& p : projections) sorted.push_back(&p);
  std::sort(sorted.begin(), sorted.end(),
            [](const ScenarioProjection* a, const ScenarioProjection* b) {
              if (a->scenario != b->scenario) return a->scenario < b->scenario;
              return a->region < b->region;
            });

  std::string out = "scenario,region,feature,year,value\n";
  for (const ScenarioProjection* proj : sorted) {
    for (const auto& [feature, series] : proj->series) {
      for (const TimePoint& p : series.points) {
        out += std::string(scenario_label(proj->scenario)) + "," + proj->region + "," + feature +
               "," + std::to_string(p.year) + "," + format_fixed6(p.value) + "\n";
      }
    }
  }
  return out;
}

WeightScheme parse_weights(const std::string& csv_text,
                           const std::vector<FeatureKey>& features) {
  const auto lines = split_lines(csv_text);

  std::map<std::string, double> group_weights;
  std::map<std::string, double> feature_weights;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    if (lines[i].empty()) continue;
    const auto fields = split_fields(lines[i]);
    if (fields.size() != 2) {
      throw Error(Errc::malformed_header,
                  "weights row needs 2 fields, got " + std::to_string(fields.size()), line_no);
    }
    if (i == 0 && fields[1] == "weight") continue;  // optional header
    const std::string& name = fields[0];
    const double weight = parse_value(fields[1], line_no);
    if (weight < 0.0) {
      throw Error(Errc::invalid_weight, "weight for '" + name + "' is negative", line_no);
    }
    const bool is_group =
        name == "economic" || name == "environmental" || name == "other";
    auto& target = is_group ? group_weights : feature_weights;
    if (!target.emplace(name, weight).second) {
      throw Error(Errc::duplicate_key, "repeated weight for '" + name + "'", line_no);
    }
  }

  WeightScheme scheme;
  std::set<std::string> known;
  for (const FeatureKey& key : features) {
    known.insert(key.name);
    auto group_it = group_weights.find(group_label(key.group));
    if (group_it != group_weights.end()) scheme.weights[key.name] = group_it->second;
  }
  for (const auto& [name, weight] : feature_weights) {
    if (!known.count(name)) {
      throw Error(Errc::unknown_feature,
                  "weights file names feature '" + name + "' absent from the dataset");
    }
    scheme.weights[name] = weight;  // feature rows override group rows
  }
  return scheme;
}

}  // namespace sspalign
