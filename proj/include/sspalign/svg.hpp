#pragma once

#include <string>

#include "sspalign/report.hpp"
#include "sspalign/types.hpp"

namespace sspalign {

/**
 * @brief Score-matrix heatmap, one row per region and one column per
 * scenario.
 *
 * Cell shading spans the observed score range with the better end darker,
 * so the colormap direction follows the matrix orientation; a degenerate
 * range shades every cell mid-scale. Every cell prints its 6-decimal
 * value. The output is a single self-contained SVG document.
 */
std::string heatmap_svg(const ScoreMatrix& matrix, YearWindow window);

/// Per-year line chart for one region: one polyline per scenario column
/// across the table's year grid, with an inline legend.
std::string norm_time_svg(const NormOverTimeTable& table);

}  // namespace sspalign
