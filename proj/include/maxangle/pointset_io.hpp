#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxangle/geometry.hpp"

// Point-set files and generators. Files are JSON objects
// {"points": [[x, y], ...], "label": "..."} where coordinates are numbers
// or decimal strings; strings survive a round trip bit-exactly.

namespace maxangle {

struct PointSetFile {
  std::vector<Point> points;
  std::string label;
};

// Exact decimal parsing onto the 1e-9 grid. At most 9 fractional digits,
// magnitude at most kMaxCoord. Throws std::invalid_argument.
std::int64_t parse_coordinate(const std::string& text);
std::int64_t coordinate_from_double(double v);
// Shortest decimal string reproducing the coordinate exactly.
std::string coordinate_to_string(std::int64_t v);

PointSetFile read_point_file(const std::string& path);
std::string point_file_json(const PointSetFile& f);
void write_point_file(const PointSetFile& f, const std::string& path);

// Load and validate in one step (n > 3, general position).
PointSet parse_pointset(const std::string& path);

struct Bbox {
  double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
};

// n uniform points on a 10^6 grid inside the box, resampled point by point
// until the set is in general position. Reproducible from the seed alone.
// Throws std::runtime_error when 1000*n draws are exhausted.
PointSetFile gen_random(int n, std::uint64_t seed, Bbox box = {});

// m equally spaced unit-circle points plus the center (n = m + 1). m must
// be odd: an even m puts antipodal pairs collinear with the center. If grid
// rounding spoils general position the ring is rotated by 1e-6 radians and
// rebuilt once.
PointSetFile gen_star(int m);

}  // namespace maxangle
