#pragma once

#include <array>

#include "rectdist/geometry.hpp"

namespace rectdist {

// For a fixed radius r about the reference point, every direction phi falls
// into exactly one of two regimes: either the full circular sector of radius
// r fits inside the rectangle there (beta(phi) >= r), or the nearest wall
// clips the disk (beta(phi) < r). Each regime decomposes into (up to) eight
// half-open angular intervals, two per wall, with closed-form endpoints.
// The joint distance/azimuth distribution integrates r^2/2 over the first
// family and a wall right-triangle area over the second.
enum class IntervalFamily { kSector, kWall };

struct AngularInterval {
  double lo = 0.0;
  double hi = 0.0;
  IntervalFamily family = IntervalFamily::kSector;
  int index = 0;  // 1..8, matching OffsetSet::h()

  // Canonical emptiness: degenerate or inverted endpoints count as empty.
  bool empty() const { return !(hi - lo > 1e-15); }
  double length() const { return empty() ? 0.0 : hi - lo; }
};

struct IntervalSet {
  std::array<AngularInterval, 8> v;
};

// Total angular measure of a set (empty members contribute 0).
double measure(const IntervalSet& s);

// Directions where the boundary circle of radius r lies inside the
// rectangle. Requires r >= 0 (throws std::invalid_argument otherwise).
// Endpoints are kept un-normalized in [0, 2pi]; intervals never straddle a
// quadrant boundary. At r = 0 the set tiles the whole circle.
IntervalSet sector_intervals(const OffsetSet& off, double r);

// Directions where the wall at offset h(i) clips the disk of radius r.
// Interval i is empty whenever r < h(i) (the wall is out of reach).
IntervalSet wall_intervals(const OffsetSet& off, double r);

// Limit of wall_intervals for r beyond every wall: each direction is
// attributed to the wall that bounds it. Used by the azimuth marginal,
// where the radial coordinate has been integrated out entirely.
IntervalSet wall_intervals_full(const OffsetSet& off);

}  // namespace rectdist
