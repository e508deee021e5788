#include "sspalign/errors.hpp"

namespace sspalign {

const char* code_name(Errc code) {
  switch (code) {
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::unparseable_number: return "UnparseableNumber";
    case Errc::duplicate_key: return "DuplicateKey";
    case Errc::non_finite_value: return "NonFiniteValue";
    case Errc::unknown_scenario: return "UnknownScenario";
    case Errc::missing_coverage: return "MissingCoverage";
    case Errc::missing_stats: return "MissingStats";
    case Errc::extrapolation_required: return "ExtrapolationRequired";
    case Errc::missing_feature: return "MissingFeature";
    case Errc::missing_weight: return "MissingWeight";
    case Errc::all_zero_weights: return "AllZeroWeights";
    case Errc::invalid_weight: return "InvalidWeight";
    case Errc::unknown_feature: return "UnknownFeature";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::insufficient_years: return "InsufficientYears";
    case Errc::target_outside_coverage: return "TargetOutsideCoverage";
    case Errc::missing_scenario: return "MissingScenario";
    case Errc::non_positive_temperature: return "NonPositiveTemperature";
    case Errc::incomplete_region: return "IncompleteRegion";
    case Errc::coverage_mismatch: return "CoverageMismatch";
    case Errc::empty_input: return "EmptyInput";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

int exit_category(Errc code) {
  switch (code) {
    case Errc::malformed_header:
    case Errc::unparseable_number:
    case Errc::duplicate_key:
    case Errc::non_finite_value:
    case Errc::unknown_scenario:
      return 1;
    case Errc::io_error:
    case Errc::invalid_config:
    case Errc::missing_weight:
    case Errc::all_zero_weights:
    case Errc::invalid_weight:
    case Errc::unknown_feature:
    case Errc::non_positive_temperature:
      return 2;
    default:
      return 3;
  }
}

}  // namespace sspalign
