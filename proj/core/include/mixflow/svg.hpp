#pragma once

#include <string>
#include <vector>

namespace mixflow::svg {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Standalone SVG document with one polyline per series, axes with min/max
/// tick labels and a legend. Non-finite points are skipped.
std::string line_plot(const std::string& title, const std::string& x_label,
                      const std::vector<Series>& series);

}  // namespace mixflow::svg
