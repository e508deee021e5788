#include "sspalign/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sspalign/errors.hpp"

namespace sspalign {

namespace {

// Series colors, keyed by scenario order SSP1..SSP5.
constexpr const char* kSeriesColor[5] = {"#2e7d32", "#1565c0", "#ef6c00",
                                         "#6a1b9a", "#c62828"};

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

/// Linear blend from the light end to the dark end of the scale.
std::string shade_color(double t) {
  constexpr int kLight[3] = {244, 244, 244};
  constexpr int kDark[3] = {34, 122, 74};
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(kLight[0] + (kDark[0] - kLight[0]) * t)),
                static_cast<int>(std::lround(kLight[1] + (kDark[1] - kLight[1]) * t)),
                static_cast<int>(std::lround(kLight[2] + (kDark[2] - kLight[2]) * t)));
  return buf;
}

std::string svg_open(int width, int height, const std::string& fingerprint) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" + std::to_string(height) +
                    "\" viewBox=\"0 0 " + std::to_string(width) + " " +
                    std::to_string(height) + "\" font-family=\"sans-serif\"" +
                    " data-config-fingerprint=\"" + xml_escape(fingerprint) + "\">\n";
  out += "  <rect width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
  return out;
}

std::string text_at(int x, int y, const std::string& body, const std::string& anchor,
                    int size, const std::string& fill,
                    const std::string& extra_class = {}) {
  std::string out = "  <text";
  if (!extra_class.empty()) out += " class=\"" + extra_class + "\"";
  out += " x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
         "\" text-anchor=\"" + anchor + "\" font-size=\"" + std::to_string(size) +
         "\" fill=\"" + fill + "\">" + xml_escape(body) + "</text>\n";
  return out;
}

}  // namespace

std::string heatmap_svg(const ScoreMatrix& matrix, YearWindow window) {
  if (matrix.entries.empty()) {
    throw Error(Errc::empty_input, "no scores to render");
  }
  const std::vector<std::string> regions = matrix.regions();

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& [key, score] : matrix.entries) {
    lo = std::min(lo, score);
    hi = std::max(hi, score);
  }

  constexpr int kMargin = 16;
  constexpr int kLabelW = 150;
  constexpr int kCellW = 110;
  constexpr int kCellH = 44;
  const int grid_top = 96;
  const int width = kMargin * 2 + kLabelW + kCellW * 5;
  const int height = grid_top + kCellH * static_cast<int>(regions.size()) + kMargin;

  std::string out = svg_open(width, height, matrix.config_fingerprint);
  const std::string title = std::string(method_label(matrix.method)) + " alignment scores";
  const std::string subtitle = std::string(orientation_label(matrix.orientation)) +
                               ", window " + window.str();
  out += text_at(kMargin, 30, title, "start", 16, "#1f1f1f");
  out += text_at(kMargin, 50, subtitle, "start", 11, "#5f5f5f");

  for (std::size_t j = 0; j < kAllScenarios.size(); ++j) {
    const int cx = kMargin + kLabelW + static_cast<int>(j) * kCellW + kCellW / 2;
    out += text_at(cx, grid_top - 10, scenario_label(kAllScenarios[j]), "middle", 12,
                   "#1f1f1f");
  }

  for (std::size_t i = 0; i < regions.size(); ++i) {
    const int row_y = grid_top + static_cast<int>(i) * kCellH;
    out += text_at(kMargin + kLabelW - 10, row_y + kCellH / 2 + 4, regions[i], "end", 12,
                   "#1f1f1f");
    for (std::size_t j = 0; j < kAllScenarios.size(); ++j) {
      const auto it = matrix.entries.find({regions[i], kAllScenarios[j]});
      if (it == matrix.entries.end()) {
        throw Error(Errc::incomplete_region, "region '" + regions[i] + "' lacks a " +
                                                 scenario_label(kAllScenarios[j]) +
                                                 " score");
      }
      const double score = it->second;
      // Better scores shade darker regardless of orientation.
      double t = 0.5;
      if (hi > lo) {
        t = matrix.orientation == Orientation::lower_better ? (hi - score) / (hi - lo)
                                                            : (score - lo) / (hi - lo);
      }
      const int x = kMargin + kLabelW + static_cast<int>(j) * kCellW;
      out += "  <rect class=\"cell\" x=\"" + std::to_string(x) + "\" y=\"" +
             std::to_string(row_y) + "\" width=\"" + std::to_string(kCellW) +
             "\" height=\"" + std::to_string(kCellH) + "\" fill=\"" + shade_color(t) +
             "\" stroke=\"#d0d0d0\"/>\n";
      out += text_at(x + kCellW / 2, row_y + kCellH / 2 + 4, format_fixed6(score), "middle",
                     11, t >= 0.55 ? "#f7f7f7" : "#1f1f1f", "cell-value");
    }
  }

  out += "</svg>\n";
  return out;
}

std::string norm_time_svg(const NormOverTimeTable& table) {
  if (table.years.empty() || table.columns.empty()) {
    throw Error(Errc::empty_input, "no per-year series to render");
  }
  for (const auto& [scenario, values] : table.columns) {
    if (values.size() != table.years.size()) {
      throw Error(Errc::coverage_mismatch, "series length differs from year grid");
    }
  }

  constexpr int kWidth = 720;
  constexpr int kHeight = 400;
  constexpr int kLeft = 80;
  constexpr int kRight = 140;
  constexpr int kTop = 56;
  constexpr int kBottom = 56;
  constexpr int kPlotW = kWidth - kLeft - kRight;
  constexpr int kPlotH = kHeight - kTop - kBottom;

  const int year_lo = table.years.front();
  const int year_hi = table.years.back();
  double val_lo = std::numeric_limits<double>::infinity();
  double val_hi = -std::numeric_limits<double>::infinity();
  for (const auto& [scenario, values] : table.columns) {
    for (double v : values) {
      val_lo = std::min(val_lo, v);
      val_hi = std::max(val_hi, v);
    }
  }

  auto x_of = [&](int year) {
    if (year_hi == year_lo) return kLeft + kPlotW / 2.0;
    return kLeft + (year - year_lo) * static_cast<double>(kPlotW) / (year_hi - year_lo);
  };
  auto y_of = [&](double value) {
    if (val_hi == val_lo) return kTop + kPlotH / 2.0;
    return kTop + (val_hi - value) * kPlotH / (val_hi - val_lo);
  };

  std::string out = svg_open(kWidth, kHeight, table.config_fingerprint);
  out += text_at(kLeft, 28, "norm measure over time (" + table.region + ")", "start", 16,
                 "#1f1f1f");
  out += text_at(kLeft, 46, "lower is better", "start", 11, "#5f5f5f");

  // Frame and axes.
  out += "  <rect x=\"" + std::to_string(kLeft) + "\" y=\"" + std::to_string(kTop) +
         "\" width=\"" + std::to_string(kPlotW) + "\" height=\"" + std::to_string(kPlotH) +
         "\" fill=\"none\" stroke=\"#9a9a9a\"/>\n";
  for (int year : table.years) {
    const int x = static_cast<int>(std::lround(x_of(year)));
    out += "  <line x1=\"" + std::to_string(x) + "\" y1=\"" +
           std::to_string(kTop + kPlotH) + "\" x2=\"" + std::to_string(x) + "\" y2=\"" +
           std::to_string(kTop + kPlotH + 5) + "\" stroke=\"#9a9a9a\"/>\n";
    out += text_at(x, kTop + kPlotH + 20, std::to_string(year), "middle", 10, "#1f1f1f");
  }
  const double ticks[3] = {val_lo, (val_lo + val_hi) / 2.0, val_hi};
  for (double tick : ticks) {
    const int y = static_cast<int>(std::lround(y_of(tick)));
    out += "  <line x1=\"" + std::to_string(kLeft - 5) + "\" y1=\"" + std::to_string(y) +
           "\" x2=\"" + std::to_string(kLeft) + "\" y2=\"" + std::to_string(y) +
           "\" stroke=\"#9a9a9a\"/>\n";
    out += text_at(kLeft - 8, y + 3, format_fixed6(tick), "end", 9, "#1f1f1f");
  }

  for (const auto& [scenario, values] : table.columns) {
    const char* color = kSeriesColor[static_cast<std::size_t>(scenario)];
    std::string points;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!points.empty()) points += " ";
      points += fixed2(x_of(table.years[i])) + "," + fixed2(y_of(values[i]));
    }
    out += std::string("  <polyline class=\"series\" fill=\"none\" stroke=\"") + color +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  }

  // Legend in the right gutter, one swatch per column.
  int legend_y = kTop + 8;
  for (const auto& [scenario, values] : table.columns) {
    const char* color = kSeriesColor[static_cast<std::size_t>(scenario)];
    out += std::string("  <rect x=\"") + std::to_string(kLeft + kPlotW + 16) + "\" y=\"" +
           std::to_string(legend_y - 10) + "\" width=\"12\" height=\"12\" fill=\"" + color +
           "\"/>\n";
    out += text_at(kLeft + kPlotW + 34, legend_y, scenario_label(scenario), "start", 11,
                   "#1f1f1f");
    legend_y += 20;
  }

  out += "</svg>\n";
  return out;
}

}  // namespace sspalign
