#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "htensor/inclusion.hpp"

namespace htensor {

/// Rasterized region plot on a fixed 800x800 canvas: one semi-transparent
/// layer of filled grid cells per set, legend embedded.
inline std::string render_regions_svg(
    const std::vector<std::pair<std::string, const Region*>>& layers,
    int grid = 200) {
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};
  const double canvas = 800.0;

  BoundingBox box{-1.0, 1.0, -1.0, 1.0};
  bool first = true;
  for (const auto& [name, region] : layers) {
    BoundingBox b = region->bounding_box();
    if (first) {
      box = b;
      first = false;
    } else {
      box.merge(b);
    }
  }
  double w = std::max(box.re_max - box.re_min, 1e-9);
  double h = std::max(box.im_max - box.im_min, 1e-9);
  double span = std::max(w, h) * 1.1;
  double cx = 0.5 * (box.re_min + box.re_max);
  double cy = 0.5 * (box.im_min + box.im_max);
  double re0 = cx - 0.5 * span, im0 = cy - 0.5 * span;
  double cell = canvas / grid;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  int color = 0;
  for (const auto& [name, region] : layers) {
    svg << "<g fill=\"" << kColors[color % 4] << "\" fill-opacity=\"0.35\">\n";
    for (int gy = 0; gy < grid; ++gy)
      for (int gx = 0; gx < grid; ++gx) {
        Cplx z(re0 + (gx + 0.5) * span / grid,
               im0 + (gy + 0.5) * span / grid);
        if (region->contains(z))
          svg << "<rect x=\"" << gx * cell << "\" y=\""
              << (grid - 1 - gy) * cell << "\" width=\"" << cell
              << "\" height=\"" << cell << "\"/>\n";
      }
    svg << "</g>\n";
    svg << "<rect x=\"20\" y=\"" << 20 + 24 * color << "\" width=\"16\" "
        << "height=\"16\" fill=\"" << kColors[color % 4]
        << "\" fill-opacity=\"0.6\"/>\n"
        << "<text x=\"42\" y=\"" << 33 + 24 * color
        << "\" font-family=\"sans-serif\" font-size=\"14\">" << name
        << "</text>\n";
    ++color;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace htensor
