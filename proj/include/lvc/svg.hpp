#pragma once

#include <string>
#include <vector>

namespace lvc {

/// One polyline of a plot.
struct PlotSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#000000";
  bool dashed = false;
  double width = 1.5;
  std::string label;
};

/// Self-contained SVG line plot with axes and a small legend. Output is a
/// pure function of the input, so identical data gives byte-identical files.
/// Throws ConfigError when there is nothing to draw.
void emit_plot(const std::string& path, const std::string& title,
               const std::vector<PlotSeries>& series);

}  // namespace lvc
