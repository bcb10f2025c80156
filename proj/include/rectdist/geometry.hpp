#pragma once

#include <array>
#include <optional>
#include <string>

namespace rectdist {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Planar polar coordinates about a reference point; theta in [0, 2pi).
struct PolarCoord {
  double r = 0.0;
  double theta = 0.0;
};

// Distance, azimuth, zenith of a node as seen from the reference antenna;
// psi in [0, pi], measured from the upward vertical at the reference.
struct SphericalCoord {
  double d = 0.0;
  double theta = 0.0;
  double psi = 0.0;
};

// Axis-aligned rectangle [-lx/2, lx/2] x [-ly/2, ly/2] with a fixed reference
// node at (ux, uy), which must lie inside the closed rectangle. uz is the
// height of the reference antenna; vz, when present, is the common height of
// the random nodes (enables the 3D quantities).
struct RectScenario {
  std::string name;
  double lx = 0.0;
  double ly = 0.0;
  double ux = 0.0;
  double uy = 0.0;
  double uz = 0.0;
  std::optional<double> vz;
};

// Throws std::invalid_argument if the side lengths are not positive/finite or
// the reference point lies outside the closed rectangle.
void validate_scenario(const RectScenario& s);

// Built-in presets "O", "A", "B", "C". Throws std::invalid_argument for
// unknown names.
RectScenario preset_scenario(const std::string& name);

// Signed distances from the reference point to the four walls:
// hx_plus = lx/2 - ux >= 0, hx_minus = -lx/2 - ux <= 0, and the y analogues.
struct OffsetSet {
  double hx_plus = 0.0;
  double hx_minus = 0.0;
  double hy_plus = 0.0;
  double hy_minus = 0.0;

  // Nonnegative wall offsets in the fixed order used by the angular
  // partition: two entries per wall,
  // [hx+, hx+, -hx-, -hx-, hy+, hy+, -hy-, -hy-].
  std::array<double, 8> h() const {
    return {hx_plus,  hx_plus,  -hx_minus, -hx_minus,
            hy_plus,  hy_plus,  -hy_minus, -hy_minus};
  }
};

OffsetSet offsets(const RectScenario& s);

// Distance from the reference point to the farthest rectangle corner; every
// node distance is <= this.
double r_max(const OffsetSet& off);

// Distance from the reference point to the rectangle boundary along
// direction phi (any real angle). Zero only when the reference sits on a
// wall and phi points outward or along that wall.
double beta(const OffsetSet& off, double phi);

// Quadrant index 1..4 of an angle, using half-open quadrants
// [0, pi/2) -> 1, [pi/2, pi) -> 2, [pi, 3pi/2) -> 3, [3pi/2, 2pi) -> 4.
// The angle is reduced to [0, 2pi) first.
int quadrant(double phi);

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

// f(b) - f(a) when b >= a, else 0. f is never evaluated on an empty
// interval (it may be singular there), and b == a short-circuits to 0 for
// the same reason.
template <class F>
double f_op(F&& f, double a, double b) {
  if (!(b > a)) return 0.0;
  return f(b) - f(a);
}

// Reduce an angle to [0, 2pi).
double normalize_angle(double a);

// Polar coordinates of v about u; theta in [0, 2pi), theta = 0 when v == u.
PolarCoord cart_to_polar(const Point2& v, const Point2& u);
Point2 polar_to_cart(const PolarCoord& p, const Point2& u);

// Lift a planar polar coordinate to (distance, azimuth, zenith) given the
// reference height uz and node height vz. The zenith is measured from the
// upward vertical: psi = pi - atan(r / (uz - vz)) when uz >= vz (node seen
// below the horizontal plane), atan(r / (vz - uz)) otherwise; equal heights
// give psi = pi/2 for every r (and psi = pi at r = 0 with uz == vz would be
// ill-defined, so equal heights always report pi/2).
SphericalCoord spherical_from_planar(const PolarCoord& p, double uz, double vz);

// Composition of cart_to_polar and spherical_from_planar.
SphericalCoord cart_to_spherical(const Point2& v, const Point2& u, double uz,
                                 double vz);

namespace detail {

// atan(num/den) extended by the limits at den == 0: +pi/2 for num > 0,
// -pi/2 for num < 0, and 0 for num == 0. Deliberately not atan2: the
// angular tables add their quadrant shifts explicitly and need the result
// confined to [-pi/2, pi/2].
double ratio_atan(double num, double den);

// acos(h/r) and asin(h/r) with the ratio clamped to [-1, 1] (tolerance
// 1e-12 for rounding excursions; beyond that throws std::domain_error).
// r == 0 with h == 0 returns the limit along r = h -> 0+: pi/2 for acos,
// 0 for asin.
double acos_ratio(double h, double r);
double asin_ratio(double h, double r);

// Throws std::logic_error if p is outside [0, 1] by more than 1e-9;
// otherwise returns p clamped to [0, 1]. Used on every probability the
// closed forms produce (always on, unlike assert()).
double clamp_probability(double p);

}  // namespace detail

}  // namespace rectdist
