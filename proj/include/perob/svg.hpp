#pragma once

// SVG drawing of a side-paired polygon: a regular k-gon whose paired sides
// share a color and carry matching labels.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "perob/realization.hpp"

namespace perob {

inline void write_polygon_svg(std::ostream& os, const PolygonPresentation& p, int size = 480) {
  const int k = p.sides;
  const double cx = size / 2.0, cy = size / 2.0, rad = size * 0.38;
  const double pi = std::acos(-1.0);
  auto vx = [&](int v) { return cx + rad * std::cos(2 * pi * v / k - pi / 2); };
  auto vy = [&](int v) { return cy + rad * std::sin(2 * pi * v / k - pi / 2); };
  char buf[256];

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  int color = 0;
  for (int s = 1; s <= k; ++s) {
    const int t = p.partner_of(s);
    if (t < s) continue;
    const double hue = 360.0 * color++ / (k / 2.0);
    for (int side : {s, t}) {
      std::snprintf(buf, sizeof buf,
                    "  <line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"hsl(%.0f,70%%,45%%)\" "
                    "stroke-width=\"4\"/>\n",
                    vx(side - 1), vy(side - 1), vx(side), vy(side), hue);
      os << buf;
      const double mx = (vx(side - 1) + vx(side)) / 2, my = (vy(side - 1) + vy(side)) / 2;
      const double lx = cx + (mx - cx) * 1.12, ly = cy + (my - cy) * 1.12;
      std::snprintf(buf, sizeof buf,
                    "  <text x=\"%.2f\" y=\"%.2f\" font-size=\"13\" text-anchor=\"middle\" "
                    "fill=\"hsl(%.0f,70%%,35%%)\">a%d%s</text>\n",
                    lx, ly + 4, hue, side, side == s ? "" : "'");
      os << buf;
    }
  }
  os << "</svg>\n";
}

}  // namespace perob
