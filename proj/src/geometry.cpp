#include "rectdist/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace rectdist {

void validate_scenario(const RectScenario& s) {
  if (!(s.lx > 0.0) || !std::isfinite(s.lx) || !(s.ly > 0.0) ||
      !std::isfinite(s.ly)) {
    throw std::invalid_argument("scenario side lengths must be positive");
  }
  if (!std::isfinite(s.ux) || !std::isfinite(s.uy) ||
      std::fabs(s.ux) > s.lx / 2.0 || std::fabs(s.uy) > s.ly / 2.0) {
    std::ostringstream msg;
    msg << "reference point (" << s.ux << ", " << s.uy
        << ") lies outside the rectangle [" << -s.lx / 2.0 << ", " << s.lx / 2.0
        << "] x [" << -s.ly / 2.0 << ", " << s.ly / 2.0 << "]";
    throw std::invalid_argument(msg.str());
  }
  if (!std::isfinite(s.uz) || (s.vz && !std::isfinite(*s.vz))) {
    throw std::invalid_argument("antenna heights must be finite");
  }
}

RectScenario preset_scenario(const std::string& name) {
  RectScenario s;
  s.name = name;
  if (name == "O") {
    s.lx = 200.0; s.ly = 100.0; s.ux = 30.0; s.uy = 25.0;
    s.uz = 10.0;  s.vz = 1.5;
  } else if (name == "A") {
    s.lx = 200.0; s.ly = 9.75; s.ux = 0.0; s.uy = 4.875;
    s.uz = 0.0;   // purely planar scenario: no node height
  } else if (name == "B") {
    s.lx = 3.0; s.ly = 5.0; s.ux = 0.5; s.uy = 1.25;
    s.uz = 3.0; s.vz = 1.5;
  } else if (name == "C") {
    s.lx = 200.0; s.ly = 100.0; s.ux = 30.0; s.uy = 25.0;
    s.uz = 10.0;  s.vz = 120.0;
  } else {
    throw std::invalid_argument("unknown scenario preset '" + name +
                                "' (expected O, A, B or C)");
  }
  validate_scenario(s);
  return s;
}

OffsetSet offsets(const RectScenario& s) {
  validate_scenario(s);
  OffsetSet o;
  o.hx_plus = s.lx / 2.0 - s.ux;
  o.hx_minus = -s.lx / 2.0 - s.ux;
  o.hy_plus = s.ly / 2.0 - s.uy;
  o.hy_minus = -s.ly / 2.0 - s.uy;
  return o;
}

double r_max(const OffsetSet& off) {
  return std::hypot(std::max(off.hx_plus, -off.hx_minus),
                    std::max(off.hy_plus, -off.hy_minus));
}

double beta(const OffsetSet& off, double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Dispatch on the sign of the trig factor rather than the quadrant of phi:
  // cos(pi/2) evaluates to +6.1e-17, and dividing a wall offset by it would
  // attribute the wrong wall to the direction. A zero factor means the ray
  // runs parallel to that wall pair and is only constrained by it in the
  // degenerate on-wall case, which returns 0 by convention.
  double tx;
  if (c > 0.0) {
    tx = off.hx_plus / c;
  } else if (c < 0.0) {
    tx = off.hx_minus / c;
  } else {
    tx = (off.hx_plus == 0.0 || off.hx_minus == 0.0) ? 0.0 : inf;
  }
  double ty;
  if (s > 0.0) {
    ty = off.hy_plus / s;
  } else if (s < 0.0) {
    ty = off.hy_minus / s;
  } else {
    ty = (off.hy_plus == 0.0 || off.hy_minus == 0.0) ? 0.0 : inf;
  }
  return std::min(tx, ty);
}

int quadrant(double phi) {
  const double a = normalize_angle(phi);
  if (a < kHalfPi) return 1;
  if (a < kPi) return 2;
  if (a < 1.5 * kPi) return 3;
  return 4;
}

double normalize_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod rounding can land exactly on 2pi
  return r;
}

PolarCoord cart_to_polar(const Point2& v, const Point2& u) {
  const double dx = v.x - u.x;
  const double dy = v.y - u.y;
  PolarCoord p;
  p.r = std::hypot(dx, dy);
  p.theta = (p.r == 0.0) ? 0.0 : normalize_angle(std::atan2(dy, dx));
  return p;
}

Point2 polar_to_cart(const PolarCoord& p, const Point2& u) {
  return {u.x + p.r * std::cos(p.theta), u.y + p.r * std::sin(p.theta)};
}

SphericalCoord spherical_from_planar(const PolarCoord& p, double uz,
                                     double vz) {
  SphericalCoord s;
  s.theta = p.theta;
  s.d = std::hypot(p.r, uz - vz);
  if (uz > vz) {
    s.psi = kPi - std::atan(p.r / (uz - vz));
  } else if (uz < vz) {
    s.psi = std::atan(p.r / (vz - uz));
  } else {
    s.psi = kHalfPi;
  }
  return s;
}

SphericalCoord cart_to_spherical(const Point2& v, const Point2& u, double uz,
                                 double vz) {
  return spherical_from_planar(cart_to_polar(v, u), uz, vz);
}

namespace detail {

double ratio_atan(double num, double den) {
  if (den == 0.0) {
    if (num > 0.0) return kHalfPi;
    if (num < 0.0) return -kHalfPi;
    return 0.0;
  }
  return std::atan(num / den);
}

namespace {
double clamped_ratio(double h, double r) {
  if (r == 0.0) {
    throw std::domain_error("offset/radius ratio undefined at r = 0");
  }
  double q = h / r;
  if (q > 1.0) {
    if (q > 1.0 + 1e-12) throw std::domain_error("offset/radius ratio > 1");
    q = 1.0;
  } else if (q < -1.0) {
    if (q < -1.0 - 1e-12) throw std::domain_error("offset/radius ratio < -1");
    q = -1.0;
  }
  return q;
}
}  // namespace

double acos_ratio(double h, double r) {
  if (r == 0.0 && h == 0.0) return kHalfPi;  // limit along r = h -> 0+
  return std::acos(clamped_ratio(h, r));
}

double asin_ratio(double h, double r) {
  if (r == 0.0 && h == 0.0) return 0.0;  // limit along r = h -> 0+
  return std::asin(clamped_ratio(h, r));
}

double clamp_probability(double p) {
  if (p < -1e-9 || p > 1.0 + 1e-9 || std::isnan(p)) {
    throw std::logic_error("probability escaped [0,1] beyond tolerance: " +
                           std::to_string(p));
  }
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

}  // namespace detail

}  // namespace rectdist
