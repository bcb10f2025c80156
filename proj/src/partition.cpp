#include "rectdist/partition.hpp"

#include <cmath>
#include <stdexcept>

namespace rectdist {

namespace {

using detail::acos_ratio;
using detail::asin_ratio;
using detail::ratio_atan;

void require_radius(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("radius must be finite and nonnegative");
  }
}

AngularInterval make(double lo, double hi, IntervalFamily fam, int index) {
  return AngularInterval{lo, hi, fam, index};
}

struct CornerDirs {
  double c1, c2, c3, c4;  // one corner direction per quadrant
};

// Directions of the four rectangle corners from the reference point. Each is
// computed from nonnegative offsets so that the ratio_atan limit at a zero
// denominator lands on the correct side (e.g. from a point on the left wall
// the top-left corner sits at pi/2, which atan(hy+/hx-) + pi would miss —
// hx- approaches 0 from below, flipping the sign of the ratio).
CornerDirs corner_dirs(const OffsetSet& off) {
  return {
      ratio_atan(off.hy_plus, off.hx_plus),
      kPi - ratio_atan(off.hy_plus, -off.hx_minus),
      kPi + ratio_atan(-off.hy_minus, -off.hx_minus),
      kTwoPi - ratio_atan(-off.hy_minus, off.hx_plus),
  };
}

}  // namespace

double measure(const IntervalSet& s) {
  double total = 0.0;
  for (const auto& iv : s.v) total += iv.length();
  return total;
}

// Endpoint layout per quadrant (two walls compete in each):
//   Q1 [0, pi/2):      right wall (index 1) then top wall (index 5)
//   Q2 [pi/2, pi):     top wall (index 6) then left wall (index 4)
//   Q3 [pi, 3pi/2):    left wall (index 3) then bottom wall (index 7)
//   Q4 [3pi/2, 2pi):   bottom wall (index 8) then right wall (index 2)
// The split angle inside each quadrant is the corner direction
// atan(wall offset ratio) with the appropriate quadrant shift; the circle
// endpoints acos(h/r), asin(h/r) slide from the quadrant edges to the corner
// direction as r grows from h to the corner distance.
IntervalSet sector_intervals(const OffsetSet& off, double r) {
  require_radius(r);
  const auto h = off.h();
  const double hxp = off.hx_plus, hxm = off.hx_minus;
  const double hyp = off.hy_plus, hym = off.hy_minus;
  const auto [c1, c2, c3, c4] = corner_dirs(off);

  IntervalSet s;
  const auto F = IntervalFamily::kSector;
  if (r >= h[0]) {
    s.v[0] = make(acos_ratio(hxp, r), c1, F, 1);
  } else {
    s.v[0] = make(0.0, c1, F, 1);
  }
  if (r >= h[1]) {
    s.v[1] = make(c4, kTwoPi - acos_ratio(hxp, r), F, 2);
  } else {
    s.v[1] = make(c4, kTwoPi, F, 2);
  }
  if (r >= h[2]) {
    s.v[2] = make(kTwoPi - acos_ratio(hxm, r), c3, F, 3);
  } else {
    s.v[2] = make(kPi, c3, F, 3);
  }
  if (r >= h[3]) {
    s.v[3] = make(c2, acos_ratio(hxm, r), F, 4);
  } else {
    s.v[3] = make(c2, kPi, F, 4);
  }
  if (r >= h[4]) {
    s.v[4] = make(c1, asin_ratio(hyp, r), F, 5);
  } else {
    s.v[4] = make(c1, kHalfPi, F, 5);
  }
  if (r >= h[5]) {
    s.v[5] = make(kPi - asin_ratio(hyp, r), c2, F, 6);
  } else {
    s.v[5] = make(kHalfPi, c2, F, 6);
  }
  if (r >= h[6]) {
    s.v[6] = make(c3, kPi - asin_ratio(hym, r), F, 7);
  } else {
    s.v[6] = make(c3, 1.5 * kPi, F, 7);
  }
  if (r >= h[7]) {
    s.v[7] = make(kTwoPi + asin_ratio(hym, r), c4, F, 8);
  } else {
    s.v[7] = make(1.5 * kPi, c4, F, 8);
  }
  return s;
}

IntervalSet wall_intervals(const OffsetSet& off, double r) {
  require_radius(r);
  const auto h = off.h();
  const double hxp = off.hx_plus, hxm = off.hx_minus;
  const double hyp = off.hy_plus, hym = off.hy_minus;
  const auto [c1, c2, c3, c4] = corner_dirs(off);

  IntervalSet s;
  const auto F = IntervalFamily::kWall;
  // A wall clips the disk only once the radius reaches it; below that the
  // interval is empty (encoded as a degenerate [0, 0) stub keeping the tag).
  auto gated = [&](int i, double lo, double hi) {
    s.v[i - 1] = (r >= h[i - 1]) ? make(lo, hi, F, i) : make(0.0, 0.0, F, i);
  };
  gated(1, 0.0, std::min(acos_ratio(hxp, std::max(r, h[0])), c1));
  gated(2, std::max(kTwoPi - acos_ratio(hxp, std::max(r, h[1])), c4), kTwoPi);
  gated(3, kPi, std::min(kTwoPi - acos_ratio(hxm, std::max(r, h[2])), c3));
  gated(4, std::max(c2, acos_ratio(hxm, std::max(r, h[3]))), kPi);
  gated(5, std::max(c1, asin_ratio(hyp, std::max(r, h[4]))), kHalfPi);
  gated(6, kHalfPi, std::min(kPi - asin_ratio(hyp, std::max(r, h[5])), c2));
  gated(7, std::max(c3, kPi - asin_ratio(hym, std::max(r, h[6]))), 1.5 * kPi);
  gated(8, 1.5 * kPi,
        std::min(kTwoPi + asin_ratio(hym, std::max(r, h[7])), c4));
  return s;
}

IntervalSet wall_intervals_full(const OffsetSet& off) {
  const auto [c1, c2, c3, c4] = corner_dirs(off);

  IntervalSet s;
  const auto F = IntervalFamily::kWall;
  s.v[0] = make(0.0, c1, F, 1);
  s.v[1] = make(c4, kTwoPi, F, 2);
  s.v[2] = make(kPi, c3, F, 3);
  s.v[3] = make(c2, kPi, F, 4);
  s.v[4] = make(c1, kHalfPi, F, 5);
  s.v[5] = make(kHalfPi, c2, F, 6);
  s.v[6] = make(c3, 1.5 * kPi, F, 7);
  s.v[7] = make(1.5 * kPi, c4, F, 8);
  return s;
}

}  // namespace rectdist
