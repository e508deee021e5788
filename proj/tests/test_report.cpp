#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sspalign/errors.hpp"
#include "sspalign/norm_score.hpp"
#include "sspalign/report.hpp"
#include "sspalign/svg.hpp"
#include "sspalign/types.hpp"

using namespace sspalign;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::io_error;
}

std::size_t count_occurrences(const std::string& haystack, const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

ScoreMatrix sample_matrix() {
  std::map<ScoreMatrix::Key, double> entries;
  const std::array<double, 5> brazil = {2.625253, 1.995356, 1.365499, 0.735788, 0.027493};
  const std::array<double, 5> germany = {0.031771, 0.648149, 1.264763, 1.881414, 2.498078};
  for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
    entries[{"brazil", kAllScenarios[i]}] = brazil[i];
    entries[{"germany", kAllScenarios[i]}] = germany[i];
  }
  return ScoreMatrix::make(ScoreMethod::norm, std::move(entries), "deadbeef00000000");
}

NormOverTimeTable sample_table() {
  NormOverTimeTable table;
  table.region = "brazil";
  table.config_fingerprint = "deadbeef00000000";
  for (int year = 2015; year <= 2022; ++year) table.years.push_back(year);
  for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
    std::vector<double> column;
    for (std::size_t j = 0; j < table.years.size(); ++j) {
      column.push_back(0.1 * static_cast<double>(i + 1) +
                       0.05 * static_cast<double>(j));
    }
    table.columns.emplace_back(kAllScenarios[i], std::move(column));
  }
  return table;
}

}  // namespace

TEST_CASE("score matrix JSON round-trips losslessly") {
  const ScoreMatrix matrix = sample_matrix();
  const YearWindow window{2015, 2022};
  const std::string json_text = score_matrix_to_json(matrix, window);

  // Deterministic serialization: byte-identical on repeat.
  CHECK(json_text == score_matrix_to_json(matrix, window));
  CHECK(json_text.back() == '\n');

  YearWindow parsed_window;
  const ScoreMatrix back = score_matrix_from_json(json_text, &parsed_window);
  CHECK(back.method == ScoreMethod::norm);
  CHECK(back.orientation == Orientation::lower_better);
  CHECK(back.config_fingerprint == "deadbeef00000000");
  CHECK(parsed_window.first == 2015);
  CHECK(parsed_window.last == 2022);
  REQUIRE(back.entries.size() == matrix.entries.size());
  for (const auto& [key, value] : matrix.entries) {
    // Values already at 6 decimals survive the round6 serialization.
    CHECK(back.entries.at(key) == doctest::Approx(value).epsilon(1e-12));
  }

  // Window output is optional.
  const ScoreMatrix again = score_matrix_from_json(json_text, nullptr);
  CHECK(again.entries.size() == matrix.entries.size());
}

TEST_CASE("score JSON parser rejects malformed documents") {
  CHECK(code_of([] { score_matrix_from_json("{not json", nullptr); }) == Errc::io_error);
  CHECK(code_of([] { score_matrix_from_json("{}", nullptr); }) == Errc::io_error);
  CHECK(code_of([] {
          score_matrix_from_json(R"({"method":"norm","orientation":"lower_better"})",
                                 nullptr);
        }) == Errc::io_error);

  // Orientation clashing with the method is rejected by construction.
  const std::string clash = R"({
    "method": "norm", "orientation": "higher_better", "window": "2015:2022",
    "config_fingerprint": "x", "entries": []
  })";
  CHECK_THROWS_AS(score_matrix_from_json(clash, nullptr), Error);

  const std::string bad_scenario = R"({
    "method": "trace", "orientation": "higher_better", "window": "2015:2022",
    "config_fingerprint": "x",
    "entries": [{"region": "r", "scenario": "SSP9", "score": 0.5}]
  })";
  CHECK(code_of([&] { score_matrix_from_json(bad_scenario, nullptr); }) ==
        Errc::unknown_scenario);
}

TEST_CASE("score CSV prints the preamble and one fixed6 cell per scenario") {
  const ScoreMatrix matrix = sample_matrix();
  const std::string csv = score_matrix_to_csv(matrix, {2015, 2022});

  CHECK(csv.find("# method: norm\n") != std::string::npos);
  CHECK(csv.find("# orientation: lower_better\n") != std::string::npos);
  CHECK(csv.find("# window: 2015:2022\n") != std::string::npos);
  CHECK(csv.find("# config_fingerprint: deadbeef00000000\n") != std::string::npos);
  CHECK(csv.find("region,SSP1,SSP2,SSP3,SSP4,SSP5\n") != std::string::npos);
  CHECK(csv.find("brazil,2.625253,1.995356,1.365499,0.735788,0.027493\n") !=
        std::string::npos);
  CHECK(csv.find("germany,0.031771,0.648149,1.264763,1.881414,2.498078\n") !=
        std::string::npos);
  // brazil sorts before germany.
  CHECK(csv.find("brazil") < csv.find("germany"));
  CHECK(count_occurrences(csv, "\r") == 0);

  ScoreMatrix partial = matrix;
  partial.entries.erase({"germany", Scenario::SSP2});
  CHECK(code_of([&] { score_matrix_to_csv(partial, {2015, 2022}); }) ==
        Errc::incomplete_region);
}

TEST_CASE("JSON and CSV artifacts agree value for value") {
  // A value needing rounding must print identically in both formats.
  std::map<ScoreMatrix::Key, double> entries;
  for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
    entries[{"r", kAllScenarios[i]}] =
        (2.0 / 3.0) * static_cast<double>(i + 1) + 1e-9;
  }
  const ScoreMatrix matrix = ScoreMatrix::make(ScoreMethod::norm, std::move(entries), "fp");

  const ScoreMatrix from_json =
      score_matrix_from_json(score_matrix_to_json(matrix, {2015, 2022}), nullptr);
  const std::string csv = score_matrix_to_csv(matrix, {2015, 2022});
  for (const auto& [key, value] : from_json.entries) {
    CHECK(csv.find(format_fixed6(value)) != std::string::npos);
    // Reserializing the parsed values reproduces the same CSV cells.
    CHECK(format_fixed6(value) == format_fixed6(matrix.entries.at(key)));
  }
}

TEST_CASE("per-year norm CSV carries region and fingerprint and round-trips") {
  std::vector<std::pair<Scenario, std::vector<YearScore>>> series;
  for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
    std::vector<YearScore> scores;
    for (int year = 2015; year <= 2018; ++year) {
      scores.push_back({year, 0.25 * static_cast<double>(i) + 0.01 * (year - 2015)});
    }
    series.emplace_back(kAllScenarios[i], std::move(scores));
  }

  const std::string csv = norm_over_time_csv("brazil", series, "deadbeef00000000");
  CHECK(csv.find("# region: brazil\n") == 0);
  CHECK(csv.find("# config_fingerprint: deadbeef00000000\n") != std::string::npos);
  CHECK(csv.find("year,SSP1,SSP2,SSP3,SSP4,SSP5\n") != std::string::npos);
  CHECK(csv.find("2015,0.000000,0.250000,0.500000,0.750000,1.000000\n") !=
        std::string::npos);

  const NormOverTimeTable table = norm_over_time_from_csv(csv);
  CHECK(table.region == "brazil");
  CHECK(table.config_fingerprint == "deadbeef00000000");
  REQUIRE(table.years == std::vector<int>{2015, 2016, 2017, 2018});
  REQUIRE(table.columns.size() == 5);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    CHECK(table.columns[i].first == kAllScenarios[i]);
    REQUIRE(table.columns[i].second.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(table.columns[i].second[j] ==
            doctest::Approx(series[i].second[j].score).epsilon(1e-12));
    }
  }
}

TEST_CASE("per-year CSV serializer and parser reject broken shapes") {
  CHECK(code_of([] { norm_over_time_csv("r", {}, "fp"); }) == Errc::empty_input);

  std::vector<std::pair<Scenario, std::vector<YearScore>>> ragged;
  ragged.emplace_back(Scenario::SSP1,
                      std::vector<YearScore>{{2015, 0.1}, {2016, 0.2}});
  ragged.emplace_back(Scenario::SSP2, std::vector<YearScore>{{2015, 0.3}});
  CHECK(code_of([&] { norm_over_time_csv("r", ragged, "fp"); }) ==
        Errc::coverage_mismatch);

  std::vector<std::pair<Scenario, std::vector<YearScore>>> shifted;
  shifted.emplace_back(Scenario::SSP1,
                       std::vector<YearScore>{{2015, 0.1}, {2016, 0.2}});
  shifted.emplace_back(Scenario::SSP2,
                       std::vector<YearScore>{{2015, 0.3}, {2017, 0.4}});
  CHECK(code_of([&] { norm_over_time_csv("r", shifted, "fp"); }) ==
        Errc::coverage_mismatch);

  const Error ragged_row = [] {
    try {
      norm_over_time_from_csv("year,SSP1,SSP2\n2015,0.1\n");
    } catch (const Error& e) {
      return e;
    }
    return Error(Errc::io_error, "unreachable");
  }();
  CHECK(ragged_row.code() == Errc::malformed_header);
  CHECK(ragged_row.line() == 2);

  CHECK(code_of([] { norm_over_time_from_csv("period,SSP1\n"); }) ==
        Errc::malformed_header);
  CHECK(code_of([] { norm_over_time_from_csv("year,SSP1\nabc,0.1\n"); }) ==
        Errc::unparseable_number);
  CHECK(code_of([] { norm_over_time_from_csv("year,SSP1\n2015,zzz\n"); }) ==
        Errc::unparseable_number);
  CHECK(code_of([] { norm_over_time_from_csv("# region: r\n"); }) == Errc::empty_input);
}

TEST_CASE("provenance document echoes inputs, config, and fingerprint") {
  const std::vector<InputDigest> inputs = {{"observations.csv", "00ff"},
                                           {"projections.csv", "11ee"}};
  const std::vector<std::pair<std::string, std::string>> echo = {
      {"method", "all"}, {"window", "2015:2022"}, {"lambda", "0.900000"}};
  const std::string doc = provenance_json(inputs, echo, "deadbeef00000000");

  CHECK(doc.find("\"tool\": \"sspalign\"") != std::string::npos);
  CHECK(doc.find("\"tool_version\"") != std::string::npos);
  CHECK(doc.find("\"config_fingerprint\": \"deadbeef00000000\"") != std::string::npos);
  CHECK(doc.find("\"observations.csv\"") != std::string::npos);
  CHECK(doc.find("\"digest\": \"11ee\"") != std::string::npos);
  CHECK(doc.find("\"method\": \"all\"") != std::string::npos);
  CHECK(doc.find("\"lambda\": \"0.900000\"") != std::string::npos);
  // No absolute paths leak into provenance.
  CHECK(doc.find("/root") == std::string::npos);
  CHECK(doc == provenance_json(inputs, echo, "deadbeef00000000"));
}

TEST_CASE("heatmap renders one shaded cell per entry") {
  const ScoreMatrix matrix = sample_matrix();
  const std::string svg = heatmap_svg(matrix, {2015, 2022});

  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("data-config-fingerprint=\"deadbeef00000000\"") != std::string::npos);
  CHECK(count_occurrences(svg, "class=\"cell\"") == 10);
  CHECK(count_occurrences(svg, "class=\"cell-value\"") == 10);
  CHECK(svg.find("norm alignment scores") != std::string::npos);
  CHECK(svg.find("lower_better, window 2015:2022") != std::string::npos);
  CHECK(svg.find("0.027493") != std::string::npos);
  CHECK(svg.find("2.625253") != std::string::npos);
  CHECK(svg.find("brazil") != std::string::npos);
  CHECK(svg.find("germany") != std::string::npos);
  CHECK(svg.find("</svg>") == svg.size() - std::string("</svg>\n").size());

  // Identical scores shade every cell mid-scale.
  std::map<ScoreMatrix::Key, double> flat;
  for (Scenario s : kAllScenarios) flat[{"r", s}] = 1.5;
  const ScoreMatrix degenerate =
      ScoreMatrix::make(ScoreMethod::trace, std::move(flat), "fp");
  const std::string flat_svg = heatmap_svg(degenerate, {2015, 2022});
  CHECK(count_occurrences(flat_svg, "fill=\"#8bb79f\"") == 5);

  const ScoreMatrix empty = ScoreMatrix::make(ScoreMethod::norm, {}, "fp");
  CHECK(code_of([&] { heatmap_svg(empty, {2015, 2022}); }) == Errc::empty_input);

  ScoreMatrix partial = matrix;
  partial.entries.erase({"brazil", Scenario::SSP4});
  CHECK(code_of([&] { heatmap_svg(partial, {2015, 2022}); }) == Errc::incomplete_region);
}

TEST_CASE("heatmap shading direction follows orientation") {
  // Same numbers under both orientations: the better end must be dark
  // (low luminance) in both, so the shaded extremes swap.
  std::map<ScoreMatrix::Key, double> entries;
  const std::array<double, 5> values = {0.1, 0.3, 0.5, 0.7, 0.9};
  for (std::size_t i = 0; i < kAllScenarios.size(); ++i) {
    entries[{"r", kAllScenarios[i]}] = values[i];
  }
  const ScoreMatrix lower = ScoreMatrix::make(ScoreMethod::norm, entries, "fp");
  const ScoreMatrix higher = ScoreMatrix::make(ScoreMethod::trace, entries, "fp");

  const std::string lower_svg = heatmap_svg(lower, {2015, 2022});
  const std::string higher_svg = heatmap_svg(higher, {2015, 2022});
  // The darkest shade is the range's best end.
  const std::string dark = "fill=\"#227a4a\"";
  const std::string light = "fill=\"#f4f4f4\"";
  REQUIRE(lower_svg.find(dark) != std::string::npos);
  REQUIRE(lower_svg.find(light) != std::string::npos);
  // Lower-better: the 0.1 cell (first column) is dark. Higher-better:
  // the 0.9 cell is dark. Dark therefore appears earlier in the
  // lower-better document.
  CHECK(lower_svg.find(dark) < lower_svg.find(light));
  CHECK(higher_svg.find(light) < higher_svg.find(dark));
}

TEST_CASE("per-year line chart draws one polyline per scenario") {
  const NormOverTimeTable table = sample_table();
  const std::string svg = norm_time_svg(table);

  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("data-config-fingerprint=\"deadbeef00000000\"") != std::string::npos);
  CHECK(count_occurrences(svg, "class=\"series\"") == 5);
  CHECK(svg.find("norm measure over time (brazil)") != std::string::npos);
  CHECK(svg.find("lower is better") != std::string::npos);
  for (Scenario s : kAllScenarios) {
    CHECK(svg.find(std::string(">") + scenario_label(s) + "<") != std::string::npos);
  }

  // Every polyline holds one vertex per year.
  std::size_t pos = 0;
  while ((pos = svg.find("points=\"", pos)) != std::string::npos) {
    const std::size_t end = svg.find('"', pos + 8);
    const std::string points = svg.substr(pos + 8, end - pos - 8);
    CHECK(count_occurrences(points, ",") == table.years.size());
    pos = end;
  }

  NormOverTimeTable empty;
  empty.region = "r";
  CHECK(code_of([&] { norm_time_svg(empty); }) == Errc::empty_input);

  NormOverTimeTable ragged = sample_table();
  ragged.columns[2].second.pop_back();
  CHECK(code_of([&] { norm_time_svg(ragged); }) == Errc::coverage_mismatch);
}
