#include "sspalign/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sspalign/align.hpp"
#include "sspalign/classify.hpp"
#include "sspalign/csv.hpp"
#include "sspalign/ensemble.hpp"
#include "sspalign/errors.hpp"
#include "sspalign/norm_score.hpp"
#include "sspalign/report.hpp"
#include "sspalign/svg.hpp"
#include "sspalign/trace_score.hpp"
#include "sspalign/types.hpp"
#include "sspalign/validate.hpp"

namespace fs = std::filesystem;

namespace sspalign {

namespace {

/// Everything a scoring run needs, with the raw flag strings kept for the
/// provenance echo and the config fingerprint.
struct RunConfig {
  std::string method = "all";
  std::string obs_path;
  std::string proj_path;
  std::string window_str = "2015:2022";
  double lambda = 0.9;
  std::string weights = "equal";
  std::string normalize = "on";
  std::string denominator = "l2";
  std::string target_policy = "same-year";
  double temperature = 1.0;
  std::string out_dir = ".";
  bool ensemble_include_classifier = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw Error(Errc::io_error, "failed while reading '" + path.string() + "'");
  }
  return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(Errc::io_error, "cannot open '" + path.string() + "' for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw Error(Errc::io_error, "failed while writing '" + path.string() + "'");
  }
}

/// All computation happens before the first byte lands on disk; a failed
/// write removes everything written so far, so runs never leave partial
/// bundles.
void write_bundle(const fs::path& out_dir, const std::map<std::string, std::string>& files) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw Error(Errc::io_error, "cannot create output directory '" + out_dir.string() + "'");
  }
  std::vector<fs::path> written;
  try {
    for (const auto& [name, content] : files) {
      const fs::path target = out_dir / name;
      write_file(target, content);
      written.push_back(target);
    }
  } catch (...) {
    for (const fs::path& path : written) {
      std::error_code ignore;
      fs::remove(path, ignore);
    }
    throw;
  }
}

std::string sanitize_filename(const std::string& name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    out += ok ? c : '_';
  }
  return out.empty() ? std::string("_") : out;
}

/// Flag-name/value pairs in a fixed order; feeds both the provenance echo
/// and the config fingerprint, so a bundle can be re-run from its echo.
std::vector<std::pair<std::string, std::string>> config_echo(const RunConfig& cfg) {
  return {
      {"method", cfg.method},
      {"window", cfg.window_str},
      {"lambda", format_fixed6(cfg.lambda)},
      {"weights", cfg.weights == "equal" ? cfg.weights
                                         : fs::path(cfg.weights).filename().string()},
      {"normalize", cfg.normalize},
      {"weight-denominator", cfg.denominator},
      {"target-policy", cfg.target_policy},
      {"temperature", format_fixed6(cfg.temperature)},
      {"ensemble-include-classifier", cfg.ensemble_include_classifier ? "on" : "off"},
  };
}

std::string config_fingerprint(const RunConfig& cfg) {
  std::string canonical = "sspalign-config-v1";
  for (const auto& [key, value] : config_echo(cfg)) {
    canonical += "|" + key + "=" + value;
  }
  return fnv1a_hex(canonical);
}

struct LoadedInputs {
  std::vector<RegionDataset> observations;
  std::vector<ScenarioProjection> projections;
  std::vector<InputDigest> digests;
};

LoadedInputs load_inputs(const std::string& obs_path, const std::string& proj_path) {
  LoadedInputs loaded;
  const std::string obs_text = read_file(obs_path);
  const std::string proj_text = read_file(proj_path);
  loaded.digests.push_back({fs::path(obs_path).filename().string(), fnv1a_hex(obs_text)});
  loaded.digests.push_back({fs::path(proj_path).filename().string(), fnv1a_hex(proj_text)});
  loaded.observations = parse_observations(obs_text);
  loaded.projections = parse_projections(proj_text);
  return loaded;
}

/// Weight scheme from the --weights flag: "equal" or a weights-file path.
WeightScheme resolve_weights(const RunConfig& cfg, const LoadedInputs& inputs) {
  std::map<std::string, FeatureKey> universe;
  for (const RegionDataset& dataset : inputs.observations) {
    for (const auto& [name, series] : dataset.series) {
      universe.emplace(name, series.feature);
    }
  }
  std::vector<FeatureKey> features;
  std::vector<std::string> names;
  for (const auto& [name, key] : universe) {
    features.push_back(key);
    names.push_back(name);
  }
  if (cfg.weights == "equal") return equal_weights(names);
  return parse_weights(read_file(cfg.weights), features);
}

std::vector<AlignedPair> build_all_pairs(const LoadedInputs& inputs, YearWindow window,
                                         bool normalize) {
  std::vector<AlignedPair> pairs;
  for (const RegionDataset& dataset : inputs.observations) {
    std::vector<AlignedPair> region_pairs =
        build_aligned_pairs(dataset, inputs.projections, window, normalize);
    pairs.insert(pairs.end(), region_pairs.begin(), region_pairs.end());
  }
  if (pairs.empty()) {
    throw Error(Errc::empty_input, "no (region, scenario) pairs to score");
  }
  return pairs;
}

int cmd_validate(const std::string& obs_path, const std::string& proj_path) {
  const std::string obs_text = read_file(obs_path);
  const std::string proj_text = read_file(proj_path);

  int violations = 0;
  auto check_datasets = [&violations](const std::string& path,
                                      const std::vector<RegionDataset>& datasets) {
    for (const RegionDataset& dataset : datasets) {
      for (const Violation& v : validate_dataset(dataset)) {
        std::cout << path << ": " << v.str() << "\n";
        ++violations;
      }
    }
  };

  auto run_side = [&](const std::string& path, auto parse,
                      const std::string& text) -> bool {
    try {
      check_datasets(path, parse(text));
      return true;
    } catch (const Error& e) {
      if (exit_category(e.code()) != 1) throw;
      std::cout << path << ":" << e.line() << ": " << e.what() << "\n";
      ++violations;
      return false;
    }
  };

  run_side(obs_path,
           [](const std::string& text) { return parse_observations(text); }, obs_text);
  run_side(proj_path,
           [](const std::string& text) {
             std::vector<RegionDataset> as_datasets;
             for (ScenarioProjection& proj : parse_projections(text)) {
               as_datasets.push_back(
                   {proj.region + " (" + scenario_label(proj.scenario) + ")",
                    std::move(proj.series)});
             }
             return as_datasets;
           },
           proj_text);

  return violations == 0 ? 0 : 1;
}

int cmd_score(const RunConfig& cfg) {
  const YearWindow window = parse_year_window(cfg.window_str);
  const LoadedInputs inputs = load_inputs(cfg.obs_path, cfg.proj_path);
  const WeightScheme weights = resolve_weights(cfg, inputs);
  const std::vector<AlignedPair> pairs =
      build_all_pairs(inputs, window, cfg.normalize == "on");
  const WeightDenominator denominator =
      cfg.denominator == "l1" ? WeightDenominator::l1 : WeightDenominator::l2;
  const std::string run_fp = config_fingerprint(cfg);

  const bool all = cfg.method == "all";
  const bool want_norm = all || cfg.method == "norm";
  const bool want_trace = all || cfg.method == "trace";
  const bool want_classify = all || cfg.method == "classify";
  const bool want_ensemble = all || cfg.method == "ensemble";
  // The ensemble consumes norm and trace (and the classifier only when
  // asked), so those matrices are computed even when not themselves
  // requested for emission.
  const bool need_norm = want_norm || want_ensemble;
  const bool need_trace = want_trace || want_ensemble;
  const bool need_classify =
      want_classify || (want_ensemble && cfg.ensemble_include_classifier);

  std::map<std::string, std::string> artifacts;

  ScoreMatrix norm_matrix;
  if (need_norm) {
    std::map<ScoreMatrix::Key, double> entries;
    for (const AlignedPair& pair : pairs) {
      entries[{pair.region, pair.scenario}] = norm_score(pair, weights, denominator).total;
    }
    norm_matrix = ScoreMatrix::make(ScoreMethod::norm, std::move(entries), run_fp);
  }
  if (want_norm) {
    artifacts["scores_norm.json"] = score_matrix_to_json(norm_matrix, window);
    artifacts["scores_norm.csv"] = score_matrix_to_csv(norm_matrix, window);
    std::map<std::string, std::vector<std::pair<Scenario, std::vector<YearScore>>>>
        per_region;
    for (const AlignedPair& pair : pairs) {
      per_region[pair.region].emplace_back(pair.scenario,
                                           norm_score_over_time(pair, weights, denominator));
    }
    for (const auto& [region, columns] : per_region) {
      artifacts["norm_over_time_" + sanitize_filename(region) + ".csv"] =
          norm_over_time_csv(region, columns, run_fp);
    }
  }

  ScoreMatrix trace_matrix;
  if (need_trace) {
    TraceConfig trace_config;
    trace_config.lambda = cfg.lambda;
    trace_config.target_policy = parse_target_policy(cfg.target_policy);
    trace_config.feature_weights = weights;
    std::map<ScoreMatrix::Key, double> entries;
    for (const AlignedPair& pair : pairs) {
      entries[{pair.region, pair.scenario}] = trace_trajectory(pair, trace_config).mean;
    }
    trace_matrix = ScoreMatrix::make(ScoreMethod::trace, std::move(entries), run_fp);
  }
  if (want_trace) {
    artifacts["scores_trace.json"] = score_matrix_to_json(trace_matrix, window);
    artifacts["scores_trace.csv"] = score_matrix_to_csv(trace_matrix, window);
  }

  ScoreMatrix classify_matrix;
  if (need_classify) {
    std::map<std::string, std::vector<AlignedPair>> by_region;
    for (const AlignedPair& pair : pairs) by_region[pair.region].push_back(pair);
    std::map<ScoreMatrix::Key, double> entries;
    for (const auto& [region, region_pairs] : by_region) {
      const SspProbability prob = classify(region_pairs, weights, cfg.temperature);
      for (const auto& [scenario, p] : prob.probs) entries[{region, scenario}] = p;
    }
    classify_matrix =
        ScoreMatrix::make(ScoreMethod::classifier, std::move(entries), run_fp);
  }
  if (want_classify) {
    artifacts["scores_classify.json"] = score_matrix_to_json(classify_matrix, window);
    artifacts["scores_classify.csv"] = score_matrix_to_csv(classify_matrix, window);
  }

  if (want_ensemble) {
    std::vector<ScoreMatrix> members = {norm_matrix, trace_matrix};
    if (cfg.ensemble_include_classifier) members.push_back(classify_matrix);
    const ScoreMatrix ensemble_matrix = ensemble(members);
    artifacts["scores_ensemble.json"] = score_matrix_to_json(ensemble_matrix, window);
    artifacts["scores_ensemble.csv"] = score_matrix_to_csv(ensemble_matrix, window);
  }

  artifacts["provenance.json"] = provenance_json(inputs.digests, config_echo(cfg), run_fp);

  write_bundle(cfg.out_dir, artifacts);
  return 0;
}

int cmd_render(const std::string& in_dir, const std::string& out_dir) {
  static constexpr const char* kTokens[] = {"norm", "trace", "classify", "ensemble"};

  std::map<std::string, std::string> artifacts;
  for (const char* token : kTokens) {
    const fs::path source = fs::path(in_dir) / ("scores_" + std::string(token) + ".json");
    if (!fs::exists(source)) continue;
    YearWindow window;
    const ScoreMatrix matrix = score_matrix_from_json(read_file(source), &window);
    artifacts["heatmap_" + std::string(token) + ".svg"] = heatmap_svg(matrix, window);
  }

  std::error_code ec;
  std::vector<fs::path> over_time_files;
  for (const fs::directory_entry& entry : fs::directory_iterator(in_dir, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("norm_over_time_", 0) == 0 && name.size() > 19 &&
        name.substr(name.size() - 4) == ".csv") {
      over_time_files.push_back(entry.path());
    }
  }
  if (ec) {
    throw Error(Errc::io_error, "cannot read input directory '" + in_dir + "'");
  }
  std::sort(over_time_files.begin(), over_time_files.end());
  for (const fs::path& source : over_time_files) {
    const NormOverTimeTable table = norm_over_time_from_csv(read_file(source));
    const std::string stem = source.filename().stem().string();
    const std::string region_token =
        table.region.empty() ? stem.substr(15) : sanitize_filename(table.region);
    artifacts["norm_time_" + region_token + ".svg"] = norm_time_svg(table);
  }

  if (artifacts.empty()) {
    throw Error(Errc::empty_input, "no score artifacts found in '" + in_dir + "'");
  }
  write_bundle(out_dir, artifacts);
  return 0;
}

int cmd_calibrate(const RunConfig& cfg, const std::string& reference_path) {
  const YearWindow window = parse_year_window(cfg.window_str);
  const LoadedInputs inputs = load_inputs(cfg.obs_path, cfg.proj_path);
  const WeightScheme weights = resolve_weights(cfg, inputs);
  const std::vector<AlignedPair> pairs =
      build_all_pairs(inputs, window, cfg.normalize == "on");

  const ScoreMatrix reference = score_matrix_from_json(read_file(reference_path), nullptr);

  TraceConfig base_config;
  base_config.lambda = cfg.lambda;
  base_config.target_policy = parse_target_policy(cfg.target_policy);
  base_config.feature_weights = weights;

  const double lambda = calibrate_lambda(pairs, reference, base_config);
  std::cout << "lambda=" << format_fixed6(lambda) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"SSP scenario alignment scoring"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string reference_path;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check input CSVs and report violations");
  validate_cmd->add_option("--obs", cfg.obs_path, "Observations CSV")->required();
  validate_cmd->add_option("--proj", cfg.proj_path, "Projections CSV")->required();

  auto add_scoring_options = [&cfg](CLI::App* cmd) {
    cmd->add_option("--obs", cfg.obs_path, "Observations CSV")->required();
    cmd->add_option("--proj", cfg.proj_path, "Projections CSV")->required();
    cmd->add_option("--window", cfg.window_str, "Analysis year range, first:last")
        ->capture_default_str();
    cmd->add_option("--weights", cfg.weights, "'equal' or a weights CSV path")
        ->capture_default_str();
    cmd->add_option("--normalize", cfg.normalize, "Pooled-projection z-scoring")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    cmd->add_option("--weight-denominator", cfg.denominator,
                    "Aggregate dividing the weighted sum")
        ->check(CLI::IsMember({"l1", "l2"}))
        ->capture_default_str();
    cmd->add_option("--target-policy", cfg.target_policy,
                    "same-year, next-year, or horizon:<year>")
        ->capture_default_str();
    cmd->add_option("--lambda", cfg.lambda, "Angle/distance mix, in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  };

  CLI::App* score_cmd = app.add_subcommand("score", "Score regions against the scenarios");
  add_scoring_options(score_cmd);
  score_cmd->add_option("--method", cfg.method, "Score family to emit")
      ->check(CLI::IsMember({"norm", "trace", "classify", "ensemble", "all"}))
      ->capture_default_str();
  score_cmd->add_option("--temperature", cfg.temperature, "Softmax temperature")
      ->capture_default_str();
  score_cmd->add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
  score_cmd->add_flag("--ensemble-include-classifier", cfg.ensemble_include_classifier,
                      "Add classifier probabilities to the ensemble");

  CLI::App* render_cmd = app.add_subcommand("render", "Draw SVG charts from score files");
  std::string in_dir;
  std::string render_out;
  render_cmd->add_option("--in", in_dir, "Directory holding score files")->required();
  render_cmd->add_option("--out", render_out, "Output directory")->required();

  CLI::App* calibrate_cmd =
      app.add_subcommand("calibrate-lambda", "Fit lambda to a reference score matrix");
  add_scoring_options(calibrate_cmd);
  calibrate_cmd->add_option("--reference", reference_path, "Reference scores JSON")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return cmd_validate(cfg.obs_path, cfg.proj_path);
    if (app.got_subcommand(score_cmd)) return cmd_score(cfg);
    if (app.got_subcommand(render_cmd)) return cmd_render(in_dir, render_out);
    if (app.got_subcommand(calibrate_cmd)) return cmd_calibrate(cfg, reference_path);
  } catch (const Error& e) {
    std::cerr << "sspalign: " << e.what();
    if (e.line() > 0) std::cerr << " (line " << e.line() << ")";
    std::cerr << "\n";
    return exit_category(e.code());
  } catch (const std::exception& e) {
    std::cerr << "sspalign: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace sspalign
