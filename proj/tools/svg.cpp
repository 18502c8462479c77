#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fcstool {

namespace {

std::string num(double v) {
  char buffer[48];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

}  // namespace

std::string scatter_svg(const std::vector<ScatterPoint>& points, const std::string& x_label,
                        const std::string& y_label, double limit) {
  const double size = 480.0, margin = 48.0;
  const double span = size - 2.0 * margin;
  auto sx = [&](double v) { return margin + span * (v / limit); };
  auto sy = [&](double v) { return size - margin - span * (v / limit); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
         "viewBox=\"0 0 480 480\">\n";
  out << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(size - margin) << "\" x2=\""
      << num(size - margin) << "\" y2=\"" << num(size - margin)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(size - margin) << "\" x2=\""
      << num(margin) << "\" y2=\"" << num(margin) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\""
      << num(sx(limit)) << "\" y2=\"" << num(sy(limit))
      << "\" stroke=\"grey\" stroke-dasharray=\"4 3\"/>\n";
  for (const auto& pt : points) {
    out << "<circle cx=\"" << num(sx(pt.x)) << "\" cy=\"" << num(sy(pt.y))
        << "\" r=\"3\" fill=\"none\" stroke=\"steelblue\"><title>" << pt.label
        << "</title></circle>\n";
  }
  out << "<text x=\"" << num(size / 2.0) << "\" y=\"" << num(size - 12.0)
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
  out << "<text x=\"14\" y=\"" << num(size / 2.0)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 14 "
      << num(size / 2.0) << ")\">" << y_label << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string trace_svg(const std::vector<double>& values, const std::string& title) {
  const double width = 640.0, height = 360.0, margin = 48.0;
  double lo = values.empty() ? 0.0 : values[0];
  double hi = lo;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (hi == lo) hi = lo + 1.0;
  const double steps = values.size() > 1 ? static_cast<double>(values.size() - 1) : 1.0;
  auto sx = [&](std::size_t i) {
    return margin + (width - 2.0 * margin) * (static_cast<double>(i) / steps);
  };
  auto sy = [&](double v) {
    return height - margin - (height - 2.0 * margin) * ((v - lo) / (hi - lo));
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" "
         "viewBox=\"0 0 640 360\">\n";
  out << "<rect width=\"640\" height=\"360\" fill=\"white\"/>\n";
  out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(height - margin) << "\" x2=\""
      << num(width - margin) << "\" y2=\"" << num(height - margin)
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(margin) << "\" y1=\"" << num(height - margin) << "\" x2=\""
      << num(margin) << "\" y2=\"" << num(margin) << "\" stroke=\"black\"/>\n";
  if (!values.empty()) {
    out << "<polyline fill=\"none\" stroke=\"firebrick\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out << ' ';
      out << num(sx(i)) << ',' << num(sy(values[i]));
    }
    out << "\"/>\n";
  }
  out << "<text x=\"" << num(width / 2.0)
      << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">" << title << "</text>\n";
  out << "<text x=\"" << num(width / 2.0) << "\" y=\"" << num(height - 12.0)
      << "\" text-anchor=\"middle\" font-size=\"13\">iteration</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace fcstool
