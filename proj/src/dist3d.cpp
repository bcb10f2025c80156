#include "rectdist/dist3d.hpp"

#include <cmath>
#include <stdexcept>

namespace rectdist {

namespace {

void require_psi(double psi) {
  if (!(psi >= 0.0) || !(psi <= kPi)) {
    throw std::invalid_argument("psi must lie in [0, pi]");
  }
}

void require_d(double d) {
  if (!(d >= 0.0)) {
    throw std::invalid_argument("d must be nonnegative");
  }
}

void require_theta(double theta) {
  if (!(theta >= 0.0) || !(theta <= kTwoPi)) {
    throw std::invalid_argument("theta must lie in [0, 2pi]");
  }
}

// Planar distance of a node seen at zenith psi from a reference dz above
// (uz > vz) the node plane. Unbounded as psi -> pi/2 from above.
double radial_from_zenith_above(double dz, double psi) {
  return dz * std::tan(kPi - psi);
}

double radial_from_zenith_below(double dz, double psi) {
  return dz * std::tan(psi);
}

}  // namespace

DistributionEval3D::DistributionEval3D(const RectScenario& s)
    : planar(s), uz(s.uz) {
  if (!s.vz) {
    throw std::invalid_argument(
        "scenario does not define a node height (vz)");
  }
  vz = *s.vz;
}

ZenithRange zenith_range(const DistributionEval3D& ev) {
  const double rm = ev.planar.rmax;
  if (ev.uz > ev.vz) {
    return {kPi - std::atan(rm / (ev.uz - ev.vz)), kPi};
  }
  if (ev.uz < ev.vz) {
    return {0.0, std::atan(rm / (ev.vz - ev.uz))};
  }
  return {kHalfPi, kHalfPi};
}

double joint_cdf_3d(const DistributionEval3D& ev, double d, double theta,
                    double psi) {
  require_d(d);
  require_theta(theta);
  require_psi(psi);
  const double dz = std::fabs(ev.uz - ev.vz);
  if (d <= dz) return 0.0;
  // Planar distance reached at slant range d.
  const double rp = std::isinf(d) ? d : std::sqrt(d * d - dz * dz);

  if (ev.uz >= ev.vz) {
    // Every node sits at or below the horizontal plane: Psi >= pi/2 always.
    if (psi < kHalfPi) return 0.0;
    double sub = 0.0;
    if (ev.uz > ev.vz && psi < kPi) {
      // Nodes closer than dz*tan(pi - psi) appear steeper than psi. At
      // psi == pi/2 the tangent blows up, correctly removing all mass.
      sub = radial_from_zenith_above(dz, psi);
    }
    const double mass =
        joint_cdf(ev.planar, rp, theta) - joint_cdf(ev.planar, sub, theta);
    return detail::clamp_probability(positive_part(mass));
  }
  // Reference below the node plane: Psi < pi/2 a.s.; a zenith cap only
  // bites below pi/2.
  double reach = rp;
  if (psi < kHalfPi) {
    reach = std::min(reach, radial_from_zenith_below(dz, psi));
  }
  return joint_cdf(ev.planar, reach, theta);
}

double angular_cdf(const DistributionEval3D& ev, double theta, double psi) {
  require_theta(theta);
  require_psi(psi);
  const double dz = std::fabs(ev.uz - ev.vz);

  if (ev.uz >= ev.vz) {
    if (psi < kHalfPi) return 0.0;
    double sub = 0.0;
    if (ev.uz > ev.vz && psi < kPi) {
      sub = radial_from_zenith_above(dz, psi);
    }
    const double mass = marginal_azimuth_cdf(ev.planar, theta) -
                        joint_cdf(ev.planar, sub, theta);
    return detail::clamp_probability(positive_part(mass));
  }
  if (psi >= kHalfPi) return marginal_azimuth_cdf(ev.planar, theta);
  return joint_cdf(ev.planar, radial_from_zenith_below(dz, psi), theta);
}

double angular_pdf(const DistributionEval3D& ev, double theta, double psi) {
  require_psi(psi);
  if (ev.uz == ev.vz) {
    throw std::domain_error(
        "angular density undefined for equal antenna heights");
  }
  const double dz = std::fabs(ev.uz - ev.vz);
  double r;
  if (ev.uz > ev.vz) {
    if (psi <= kHalfPi || psi >= kPi) return 0.0;
    r = radial_from_zenith_above(dz, psi);
  } else {
    if (psi <= 0.0 || psi >= kHalfPi) return 0.0;
    r = radial_from_zenith_below(dz, psi);
  }
  const double c = std::cos(psi);
  return dz / (c * c) * joint_pdf(ev.planar, r, theta);
}

AngularMode angular_pdf_mode(const DistributionEval3D& ev, double step) {
  if (!(step > 0.0) || !(step < kPi)) {
    throw std::invalid_argument("grid step must lie in (0, pi)");
  }
  AngularMode best{0.0, 0.0, -1.0};
  // Index-driven grid: accumulating step would drift off the exact
  // multiples after dozens of additions.
  const int npsi = static_cast<int>(std::ceil(kPi / step));
  const int ntheta = static_cast<int>(std::ceil(kTwoPi / step));
  for (int j = 0; j < npsi; ++j) {
    const double psi = j * step;
    if (psi >= kPi) break;
    for (int i = 0; i < ntheta; ++i) {
      const double theta = i * step;
      if (theta >= kTwoPi) break;
      const double v = angular_pdf(ev, theta, psi);
      if (v > best.value) best = {theta, psi, v};
    }
  }
  return best;
}

}  // namespace rectdist
