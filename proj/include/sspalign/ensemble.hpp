#pragma once

#include <map>
#include <vector>

#include "sspalign/types.hpp"

namespace sspalign {

/**
 * Within each region, ranks the five scenarios from 1 (best aligned) to 5
 * (worst), honoring the matrix orientation; exact ties receive the
 * average of the tied positions. Throws Errc::incomplete_region when a
 * region lacks any scenario.
 */
std::map<ScoreMatrix::Key, double> to_alignment_ranks(const ScoreMatrix& matrix);

/**
 * Orientation-harmonized rank ensemble over two or more matrices covering
 * the same (region, scenario) set: per cell, the mean rank mapped
 * affinely onto [0, 1] with 1 = best. Symmetric in its inputs.
 */
ScoreMatrix ensemble(const std::vector<ScoreMatrix>& inputs);

}  // namespace sspalign
