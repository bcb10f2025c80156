#pragma once

#include <functional>

#include "rectdist/geometry.hpp"
#include "rectdist/partition.hpp"

namespace rectdist {

// Precomputed context for the distance/azimuth distribution of a uniformly
// random node about the scenario's reference point.
struct DistributionEval2D {
  RectScenario scenario;
  OffsetSet off;
  double area = 0.0;  // lx * ly
  double rmax = 0.0;  // farthest corner distance

  explicit DistributionEval2D(const RectScenario& s);
};

// P(R <= r, Theta <= theta) in closed form. Requires r >= 0 and theta in
// [0, 2pi] (throws std::invalid_argument otherwise); r beyond the farthest
// corner saturates. The radial direction integrates to r^2/2 over sector
// intervals and to a wall right-triangle area (offset^2 * tan or -cot
// differences) over wall intervals.
double joint_cdf(const DistributionEval2D& ev, double r, double theta);

// Joint density d^2 F / (dr dtheta): r / (lx ly) on {r <= beta(theta)},
// 0 elsewhere. theta is reduced to [0, 2pi).
double joint_pdf(const DistributionEval2D& ev, double r, double theta);

// P(Theta <= theta) for theta in [0, 2pi]: the r -> infinity limit of the
// joint form, leaving only full-angle wall terms.
double marginal_azimuth_cdf(const DistributionEval2D& ev, double theta);

// Azimuth marginal density: sum of wall terms offset^2/cos^2 (x walls) and
// offset^2/sin^2 (y walls) over left-closed direction intervals, scaled by
// 1/(2 lx ly). Nonnegative by construction; enforced before returning.
double marginal_azimuth_pdf(const DistributionEval2D& ev, double theta);

// P(R <= r) = joint_cdf(r, 2pi).
double marginal_distance_cdf(const DistributionEval2D& ev, double r);

// Leftmost theta* in [0, 2pi] with marginal_azimuth_cdf(theta*) >= p,
// located by bisection; |cdf(theta*) - p| <= 1e-10 for p in (0, 1).
double azimuth_quantile(const DistributionEval2D& ev, double p);

// Reference joint CDF for an arbitrary star-shaped region described by its
// boundary-distance function: numerically integrates
// 0.5 * min(r, boundary(phi))^2 / area over phi in [0, theta], splitting
// panels at quadrant edges and at sign changes of boundary(phi) - r so the
// adaptive rule only sees smooth pieces. Throws std::runtime_error with the
// achieved error estimate if the tolerance cannot be met.
double generic_joint_cdf(const std::function<double(double)>& boundary,
                         double area, double r, double theta,
                         double abs_tol = 1e-10);

}  // namespace rectdist
