#pragma once

// Text and image serializations of sweep grids.
//
// CSV: header `lambda,gamma,p,discord_entropic,discord_geometric,theta_star`,
// one row per cell in grid order, values printed with 12 significant digits,
// "\n" line endings.
//
// Heatmap: binary PGM (P5), width = axis-1 count, height = axis-0 count,
// maxval 255. Entropic discord maps linearly from [0, max cell] onto
// [255 (white), 0 (black)]; cells with discord <= 1e-8 are pure white.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qdiscord/scenario.hpp"

namespace qdiscord {

constexpr const char* kCsvHeader =
    "lambda,gamma,p,discord_entropic,discord_geometric,theta_star";
constexpr double kWhiteThreshold = 1e-8;

inline std::string format_decimal(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_csv(std::ostream& out, const SweepGrid& grid) {
  out << kCsvHeader << '\n';
  for (const SweepCell& c : grid.cells) {
    out << format_decimal(c.lambda) << ',' << format_decimal(c.gamma) << ','
        << format_decimal(c.p) << ',' << format_decimal(c.entropic) << ','
        << format_decimal(c.geometric) << ',' << format_decimal(c.theta_star) << '\n';
  }
}

inline std::vector<std::uint8_t> heatmap_pixels(const SweepGrid& grid) {
  double peak = 0.0;
  for (const SweepCell& c : grid.cells) peak = std::max(peak, c.entropic);
  std::vector<std::uint8_t> px;
  px.reserve(grid.cells.size());
  for (const SweepCell& c : grid.cells) {
    if (c.entropic <= kWhiteThreshold || peak <= 0.0) {
      px.push_back(255);
      continue;
    }
    const double shade = 255.0 * (1.0 - c.entropic / peak);
    px.push_back(static_cast<std::uint8_t>(std::lround(std::clamp(shade, 0.0, 255.0))));
  }
  return px;
}

inline void write_pgm(std::ostream& out, const SweepGrid& grid) {
  out << "P5\n" << grid.cols() << ' ' << grid.rows() << "\n255\n";
  const auto px = heatmap_pixels(grid);
  out.write(reinterpret_cast<const char*>(px.data()),
            static_cast<std::streamsize>(px.size()));
}

}  // namespace qdiscord
