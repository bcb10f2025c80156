#pragma once

#include "rectdist/dist2d.hpp"
#include "rectdist/geometry.hpp"

namespace rectdist {

// Context for the distance/azimuth/zenith distribution when both antenna
// heights are fixed: the reference at uz, every random node at vz. Requires
// the scenario to define vz.
struct DistributionEval3D {
  DistributionEval2D planar;
  double uz = 0.0;
  double vz = 0.0;

  explicit DistributionEval3D(const RectScenario& s);
};

// Closed support of the zenith angle: psi_min = psi_max = pi/2 for equal
// heights; otherwise the zenith sweeps from the vertical limit at the
// farthest corner to the straight-down (or up) direction at range 0.
struct ZenithRange {
  double psi_min = 0.0;
  double psi_max = 0.0;
};

ZenithRange zenith_range(const DistributionEval3D& ev);

// P(D <= d, Theta <= theta, Psi <= psi). The node heights tie distance and
// zenith to the planar range, so this reduces to differences of the planar
// joint CDF at the radial distances implied by d and psi.
// Requires d >= 0, theta in [0, 2pi], psi in [0, pi].
double joint_cdf_3d(const DistributionEval3D& ev, double d, double theta,
                    double psi);

// P(Theta <= theta, Psi <= psi): the d -> infinity limit of joint_cdf_3d.
double angular_cdf(const DistributionEval3D& ev, double theta, double psi);

// Joint azimuth/zenith density |uz - vz| / cos^2(psi) times the planar
// joint density at the radial distance implied by psi. Zero outside the
// open zenith support. Throws std::domain_error for equal heights (the
// zenith is then deterministic and the density has no Lebesgue form).
double angular_pdf(const DistributionEval3D& ev, double theta, double psi);

struct AngularMode {
  double theta = 0.0;
  double psi = 0.0;
  double value = 0.0;
};

// Argmax of angular_pdf over the grid {(i*step, j*step): i*step < 2pi,
// j*step < pi}. Scans zenith rows outward, azimuth within a row; the first
// strict maximum wins, so exact ties resolve to the smallest (psi, theta)
// in that scan order. The density is flat in theta wherever the implied
// radial distance stays inside the boundary, so ties are common.
AngularMode angular_pdf_mode(const DistributionEval3D& ev, double step);

}  // namespace rectdist
