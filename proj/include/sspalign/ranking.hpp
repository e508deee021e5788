#pragma once

#include <optional>
#include <span>
#include <vector>

namespace sspalign {

/// Ascending ranks 1..n with exact ties receiving the average of the tied
/// positions ([0.5, 0.2, 0.5] -> [2.5, 1, 2.5]).
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation. Empty when it is undefined: fewer than two
/// samples or zero rank variance on either side.
std::optional<double> spearman_correlation(std::span<const double> a,
                                           std::span<const double> b);

}  // namespace sspalign
