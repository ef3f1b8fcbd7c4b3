#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cgdlab::cli {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 780;
  int height = 520;
  bool scatter = false;  // markers only, no connecting lines
};

// Standalone SVG: axes with ticks, one polyline (or marker cloud) per
// series, and a legend. Output is deterministic for identical input.
std::string render_plot(const std::vector<Series>& series,
                        const PlotOptions& options);

}  // namespace cgdlab::cli
