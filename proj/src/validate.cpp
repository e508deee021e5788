#include "sspalign/validate.hpp"

#include <cmath>

namespace sspalign {

std::string Violation::str() const {
  std::string out = "region=" + region;
  if (!feature.empty()) out += " feature=" + feature;
  out += ": " + rule;
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

std::vector<Violation> validate_dataset(const RegionDataset& dataset) {
  std::vector<Violation> violations;
  auto add = [&](const std::string& feature, const std::string& rule,
                 const std::string& detail) {
    violations.push_back({dataset.region, feature, rule, detail});
  };

  if (dataset.region.empty()) add("", "empty-region", "");

  for (const auto& [name, series] : dataset.series) {
    if (name.empty() || series.feature.name.empty()) {
      add(name, "empty-feature-name", "");
    }
    if (name != series.feature.name) {
      add(name, "feature-key-mismatch", "map key '" + name + "' vs series key '" +
                                            series.feature.name + "'");
    }
    if (series.points.empty()) {
      add(name, "empty-series", "a series needs at least one point");
      continue;
    }
    for (std::size_t i = 0; i < series.points.size(); ++i) {
      const TimePoint& p = series.points[i];
      if (!std::isfinite(p.value)) {
        add(name, "non-finite-value", "year " + std::to_string(p.year));
      }
      if (i > 0) {
        const int prev = series.points[i - 1].year;
        if (p.year == prev) {
          add(name, "duplicate-year", "year " + std::to_string(p.year));
        } else if (p.year < prev) {
          add(name, "years-not-increasing",
              std::to_string(prev) + " followed by " + std::to_string(p.year));
        }
      }
    }
  }
  return violations;
}

}  // namespace sspalign
