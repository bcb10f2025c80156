#include "rectdist/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rectdist/dist2d.hpp"
#include "rectdist/dist3d.hpp"

namespace rectdist {

SampleSet sample_points(const RectScenario& s, std::size_t n,
                        std::uint64_t seed) {
  validate_scenario(s);
  SampleSet set;
  set.scenario = s;
  set.seed = seed;
  set.points.reserve(n);
  set.polar.reserve(n);
  CounterRng rng(seed);
  const Point2 u{s.ux, s.uy};
  for (std::size_t i = 0; i < n; ++i) {
    Point2 p;
    p.x = (rng.next_unit() - 0.5) * s.lx;
    p.y = (rng.next_unit() - 0.5) * s.ly;
    set.points.push_back(p);
    set.polar.push_back(cart_to_polar(p, u));
  }
  return set;
}

double empirical_joint_cdf(const SampleSet& set, double r, double theta) {
  if (set.polar.empty()) throw std::invalid_argument("empty sample set");
  std::size_t count = 0;
  for (const auto& p : set.polar) {
    if (p.r <= r && p.theta <= theta) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(set.polar.size());
}

double empirical_azimuth_cdf(const SampleSet& set, double theta) {
  if (set.polar.empty()) throw std::invalid_argument("empty sample set");
  std::size_t count = 0;
  for (const auto& p : set.polar) {
    if (p.theta <= theta) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(set.polar.size());
}

double empirical_joint_cdf_3d(const SampleSet& set, double vz, double d,
                              double theta, double psi) {
  if (set.polar.empty()) throw std::invalid_argument("empty sample set");
  const double uz = set.scenario.uz;
  std::size_t count = 0;
  for (const auto& p : set.polar) {
    const SphericalCoord sc = spherical_from_planar(p, uz, vz);
    if (sc.d <= d && sc.theta <= theta && sc.psi <= psi) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(set.polar.size());
}

double chi_square_uniformity(const SampleSet& set, int nx, int ny) {
  if (nx <= 0 || ny <= 0) throw std::invalid_argument("bin counts must be positive");
  if (set.points.empty()) throw std::invalid_argument("empty sample set");
  const auto& s = set.scenario;
  std::vector<std::size_t> counts(static_cast<std::size_t>(nx) * ny, 0);
  for (const auto& p : set.points) {
    int ix = static_cast<int>((p.x / s.lx + 0.5) * nx);
    int iy = static_cast<int>((p.y / s.ly + 0.5) * ny);
    ix = std::min(std::max(ix, 0), nx - 1);
    iy = std::min(std::max(iy, 0), ny - 1);
    counts[static_cast<std::size_t>(iy) * nx + ix]++;
  }
  const double expected =
      static_cast<double>(set.points.size()) / (static_cast<double>(nx) * ny);
  double stat = 0.0;
  for (std::size_t c : counts) {
    const double dev = static_cast<double>(c) - expected;
    stat += dev * dev / expected;
  }
  return stat;
}

ValidationReport validate(const RectScenario& s, std::size_t n,
                          std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("need at least one sample");
  ValidationReport rep;
  rep.scenario = s;
  rep.n_samples = n;
  rep.seed = seed;

  const SampleSet set = sample_points(s, n, seed);
  const DistributionEval2D ev(s);

  std::vector<double> angles;
  for (int j = 1; j <= 20; ++j) angles.push_back(kTwoPi * j / 20.0);
  for (int q = 0; q < 4; ++q) {
    for (double frac : {0.125, 0.25, 0.375}) {
      angles.push_back((q + 2.0 * frac) * kHalfPi);
    }
  }

  for (int i = 1; i <= 20; ++i) {
    const double r = ev.rmax * i / 20.0;
    for (double theta : angles) {
      ValidationRow row;
      row.r = r;
      row.theta = theta;
      row.analytic = joint_cdf(ev, r, theta);
      row.empirical = empirical_joint_cdf(set, r, theta);
      row.abs_dev = std::fabs(row.analytic - row.empirical);
      rep.rows.push_back(row);
    }
  }

  if (s.vz) {
    const DistributionEval3D ev3(s);
    const double dz = std::fabs(ev3.uz - ev3.vz);
    const double dmax = std::hypot(ev.rmax, dz);
    const ZenithRange zr = zenith_range(ev3);
    for (int i = 1; i <= 20; ++i) {
      const double d = dz + (dmax - dz) * i / 20.0;
      for (int j = 1; j <= 20; ++j) {
        const double theta = kTwoPi * j / 20.0;
        // Cycle the zenith through the interior quartiles of its support.
        const int q = (j - 1) % 4 + 1;
        const double psi =
            zr.psi_min + (zr.psi_max - zr.psi_min) * q / 5.0;
        ValidationRow row;
        row.is3d = true;
        row.r = d;
        row.theta = theta;
        row.psi = psi;
        row.analytic = joint_cdf_3d(ev3, d, theta, psi);
        row.empirical = empirical_joint_cdf_3d(set, ev3.vz, d, theta, psi);
        row.abs_dev = std::fabs(row.analytic - row.empirical);
        rep.rows.push_back(row);
      }
    }
  }

  for (const auto& row : rep.rows) {
    rep.sup_deviation = std::max(rep.sup_deviation, row.abs_dev);
  }
  return rep;
}

namespace {
void put_g12(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  os << buf;
}
}  // namespace

void write_validation_csv(const ValidationReport& rep, std::ostream& os) {
  os << "kind,r,theta,psi,analytic,empirical,abs_dev\n";
  for (const auto& row : rep.rows) {
    os << (row.is3d ? "joint3d," : "joint2d,");
    put_g12(os, row.r);
    os << ',';
    put_g12(os, row.theta);
    os << ',';
    if (row.is3d) put_g12(os, row.psi);
    os << ',';
    put_g12(os, row.analytic);
    os << ',';
    put_g12(os, row.empirical);
    os << ',';
    put_g12(os, row.abs_dev);
    os << '\n';
  }
}

}  // namespace rectdist
