#pragma once

#include <stdexcept>
#include <string>

namespace sspalign {

/// Error codes raised by the library. Each maps 1:1 to a stable CamelCase
/// name (see code_name) used in CLI diagnostics and tests.
enum class Errc {
  // input parsing
  malformed_header,
  unparseable_number,
  duplicate_key,
  non_finite_value,
  unknown_scenario,
  // alignment / normalization
  missing_coverage,
  missing_stats,
  extrapolation_required,
  missing_feature,
  // weights
  missing_weight,
  all_zero_weights,
  invalid_weight,
  unknown_feature,
  // trajectory scoring
  dimension_mismatch,
  insufficient_years,
  target_outside_coverage,
  // classification
  missing_scenario,
  non_positive_temperature,
  // ranking / ensembling
  incomplete_region,
  coverage_mismatch,
  empty_input,
  // CLI / configuration
  invalid_config,
  io_error,
};

/// Stable diagnostic name for an error code, e.g. "DuplicateKey".
const char* code_name(Errc code);

/// Exit-code category used by the CLI: 1 = input validation failure,
/// 2 = I/O or configuration problem, 3 = scoring-module error.
int exit_category(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, int line = 0)
      : std::runtime_error(std::string(code_name(code)) + ": " + message),
        code_(code),
        line_(line) {}

  Errc code() const { return code_; }

  /// 1-based input line for file-anchored errors, 0 otherwise.
  int line() const { return line_; }

 private:
  Errc code_;
  int line_;
};

}  // namespace sspalign
