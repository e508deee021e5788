#pragma once

#include <string>
#include <vector>

#include "sspalign/types.hpp"

namespace sspalign {

/// One broken dataset invariant, naming where it was found.
struct Violation {
  std::string region;
  std::string feature;
  std::string rule;
  std::string detail;

  std::string str() const;
};

/// Checks every TimeSeries invariant; empty result means the dataset is
/// well formed. Pure: never throws, never mutates.
std::vector<Violation> validate_dataset(const RegionDataset& dataset);

}  // namespace sspalign
