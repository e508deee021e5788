#include "sspalign/report.hpp"

#include <charconv>
#include <cmath>

#include <json.hpp>

#include "sspalign/errors.hpp"

namespace sspalign {

namespace {

using nlohmann::json;

constexpr const char* kToolVersion = "0.1.0";

/// Round to the 6 decimals every artifact prints, so JSON numbers agree
/// with the CSV text exactly.
double round6(double value) { return std::round(value * 1e6) / 1e6; }

}  // namespace

std::string score_matrix_to_json(const ScoreMatrix& matrix, YearWindow window) {
  json doc;
  doc["method"] = method_label(matrix.method);
  doc["orientation"] = orientation_label(matrix.orientation);
  doc["window"] = window.str();
  doc["config_fingerprint"] = matrix.config_fingerprint;
  json entries = json::array();
  for (const auto& [key, score] : matrix.entries) {
    entries.push_back({{"region", key.first},
                       {"scenario", scenario_label(key.second)},
                       {"score", round6(score)}});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

ScoreMatrix score_matrix_from_json(const std::string& json_text, YearWindow* window_out) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw Error(Errc::io_error, std::string("cannot parse score JSON: ") + ex.what());
  }
  try {
    const ScoreMethod method = parse_method_label(doc.at("method").get<std::string>());
    const Orientation orientation =
        parse_orientation_label(doc.at("orientation").get<std::string>());
    if (window_out != nullptr) {
      *window_out = parse_year_window(doc.at("window").get<std::string>());
    }
    std::map<ScoreMatrix::Key, double> entries;
    for (const json& entry : doc.at("entries")) {
      const std::string region = entry.at("region").get<std::string>();
      const Scenario scenario = parse_scenario(entry.at("scenario").get<std::string>());
      entries[{region, scenario}] = entry.at("score").get<double>();
    }
    return ScoreMatrix::make(method, orientation, std::move(entries),
                             doc.value("config_fingerprint", std::string{}));
  } catch (const json::exception& ex) {
    throw Error(Errc::io_error, std::string("score JSON missing fields: ") + ex.what());
  }
}

std::string score_matrix_to_csv(const ScoreMatrix& matrix, YearWindow window) {
  std::string out;
  out += std::string("# method: ") + method_label(matrix.method) + "\n";
  out += std::string("# orientation: ") + orientation_label(matrix.orientation) + "\n";
  out += "# window: " + window.str() + "\n";
  out += "# config_fingerprint: " + matrix.config_fingerprint + "\n";
  out += "region,SSP1,SSP2,SSP3,SSP4,SSP5\n";
  for (const std::string& region : matrix.regions()) {
    out += region;
    for (Scenario s : kAllScenarios) {
      auto it = matrix.entries.find({region, s});
      if (it == matrix.entries.end()) {
        throw Error(Errc::incomplete_region,
                    "region '" + region + "' lacks a " + scenario_label(s) + " score");
      }
      out += "," + format_fixed6(it->second);
    }
    out += "\n";
  }
  return out;
}

std::string norm_over_time_csv(
    const std::string& region,
    const std::vector<std::pair<Scenario, std::vector<YearScore>>>& series,
    const std::string& config_fingerprint) {
  if (series.empty()) {
    throw Error(Errc::empty_input, "no per-year series to serialize");
  }
  const std::vector<YearScore>& first = series.front().second;
  for (const auto& [scenario, scores] : series) {
    if (scores.size() != first.size()) {
      throw Error(Errc::coverage_mismatch, "per-year series disagree on year grids");
    }
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i].year != first[i].year) {
        throw Error(Errc::coverage_mismatch, "per-year series disagree on year grids");
      }
    }
  }

  std::string out;
  out += "# region: " + region + "\n";
  out += "# config_fingerprint: " + config_fingerprint + "\n";
  out += "year";
  for (const auto& [scenario, scores] : series) {
    out += std::string(",") + scenario_label(scenario);
  }
  out += "\n";
  for (std::size_t i = 0; i < first.size(); ++i) {
    out += std::to_string(first[i].year);
    for (const auto& [scenario, scores] : series) {
      out += "," + format_fixed6(scores[i].score);
    }
    out += "\n";
  }
  return out;
}

NormOverTimeTable norm_over_time_from_csv(const std::string& csv_text) {
  NormOverTimeTable table;
  std::size_t pos = 0;
  int line_no = 0;
  bool header_seen = false;
  while (pos < csv_text.size()) {
    std::size_t end = csv_text.find('\n', pos);
    if (end == std::string::npos) end = csv_text.size();
    std::string line = csv_text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::size_t colon = line.find(": ");
      if (colon != std::string::npos) {
        std::string key = line.substr(1, colon - 1);
        while (!key.empty() && key.front() == ' ') key.erase(key.begin());
        const std::string value = line.substr(colon + 2);
        if (key == "region") table.region = value;
        if (key == "config_fingerprint") table.config_fingerprint = value;
      }
      continue;
    }

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      header_seen = true;
      if (fields.empty() || fields.front() != "year") {
        throw Error(Errc::malformed_header, "per-year CSV must start with a 'year' column",
                    line_no);
      }
      for (std::size_t i = 1; i < fields.size(); ++i) {
        table.columns.emplace_back(parse_scenario(fields[i], line_no), std::vector<double>{});
      }
      continue;
    }
    if (fields.size() != table.columns.size() + 1) {
      throw Error(Errc::malformed_header, "ragged per-year CSV row", line_no);
    }
    int year = 0;
    {
      auto [ptr, ec] =
          std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), year);
      if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
        throw Error(Errc::unparseable_number, "cannot parse year '" + fields[0] + "'", line_no);
      }
    }
    table.years.push_back(year);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double value = 0.0;
      auto [ptr, ec] =
          std::from_chars(fields[i].data(), fields[i].data() + fields[i].size(), value);
      if (ec != std::errc{} || ptr != fields[i].data() + fields[i].size() ||
          !std::isfinite(value)) {
        throw Error(Errc::unparseable_number, "cannot parse value '" + fields[i] + "'",
                    line_no);
      }
      table.columns[i - 1].second.push_back(value);
    }
  }
  if (table.columns.empty()) {
    throw Error(Errc::empty_input, "per-year CSV has no scenario columns");
  }
  return table;
}

std::string provenance_json(const std::vector<InputDigest>& inputs,
                            const std::vector<std::pair<std::string, std::string>>& config_echo,
                            const std::string& fingerprint) {
  json doc;
  doc["tool"] = "sspalign";
  doc["tool_version"] = kToolVersion;
  doc["config_fingerprint"] = fingerprint;
  json in = json::array();
  for (const InputDigest& input : inputs) {
    in.push_back({{"name", input.name}, {"digest", input.digest}});
  }
  doc["inputs"] = std::move(in);
  json config = json::object();
  for (const auto& [key, value] : config_echo) config[key] = value;
  doc["config"] = std::move(config);
  return doc.dump(2) + "\n";
}

}  // namespace sspalign
