#pragma once

#include <string>
#include <vector>

namespace fcstool {

// Minimal standalone vector graphics for the two plot kinds. No styling
// knobs; these exist so results can be eyeballed without extra tooling.

struct ScatterPoint {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

// Square scatter with the identity diagonal, both axes spanning [0, limit].
std::string scatter_svg(const std::vector<ScatterPoint>& points, const std::string& x_label,
                        const std::string& y_label, double limit);

// Objective-trace polyline over (iteration, value).
std::string trace_svg(const std::vector<double>& values, const std::string& title);

}  // namespace fcstool
