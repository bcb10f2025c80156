#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rectdist/dist2d.hpp"
#include "rectdist/geometry.hpp"
#include "rectdist/montecarlo.hpp"
#include "rectdist/partition.hpp"
#include "rectdist/quadrature.hpp"

using namespace rectdist;

namespace {

RectScenario centered(double lx, double ly) {
  RectScenario s;
  s.lx = lx;
  s.ly = ly;
  return s;
}

// Mixed second difference of the joint CDF, approximating d^2F/(dr dtheta).
double mixed_fd(const DistributionEval2D& ev, double r, double theta,
                double h) {
  return (joint_cdf(ev, r + h, theta + h) - joint_cdf(ev, r + h, theta - h) -
          joint_cdf(ev, r - h, theta + h) + joint_cdf(ev, r - h, theta - h)) /
         (4.0 * h * h);
}

// All finite endpoints of the full-angle wall partition: the azimuth
// marginal's only non-smooth points.
std::vector<double> marginal_breakpoints(const OffsetSet& off) {
  std::vector<double> pts{kHalfPi, kPi, 1.5 * kPi};
  for (const auto& iv : wall_intervals_full(off).v) {
    if (iv.empty()) continue;
    pts.push_back(iv.lo);
    pts.push_back(iv.hi);
  }
  return pts;
}

}  // namespace

TEST_CASE("evaluator precomputes area and reach") {
  const DistributionEval2D ev(preset_scenario("O"));
  CHECK(ev.area == 20000.0);
  CHECK(std::fabs(ev.rmax - 150.08331019803634) <= 1e-11);
}

TEST_CASE("centered unit-reach square: closed forms are exact") {
  const DistributionEval2D ev(centered(2, 2));
  CHECK(std::fabs(joint_cdf(ev, 1.0, kTwoPi) - kPi / 4.0) <= 1e-12);
  CHECK(std::fabs(joint_cdf(ev, 1.0, kHalfPi) - kPi / 16.0) <= 1e-12);
  // Half-plane probability of a clipped radius, from the quadrature oracle.
  CHECK(std::fabs(joint_cdf(ev, 1.2, kPi) - 0.4754555653925542) <= 1e-9);
  // Full reach saturates.
  CHECK(joint_cdf(ev, std::sqrt(2.0), kTwoPi) == doctest::Approx(1.0));
  CHECK(joint_cdf(ev, 50.0, kTwoPi) == doctest::Approx(1.0));
}

TEST_CASE("joint CDF spot values match the quadrature oracle") {
  const DistributionEval2D o(preset_scenario("O"));
  CHECK(std::fabs(joint_cdf(o, 60.0, kPi) - 0.14553902835128843) <= 1e-9);
  CHECK(std::fabs(joint_cdf(o, 100.0, 1.5 * kPi) - 0.5472205410215344) <=
        1e-9);
  CHECK(std::fabs(joint_cdf(o, 140.0, kTwoPi) - 0.9937298636035395) <= 1e-9);
  CHECK(std::fabs(joint_cdf(o, 50.0, kTwoPi) - 0.315925975535677) <= 1e-9);
  CHECK(std::fabs(joint_cdf(o, 80.0, 0.3) - 0.03789369057717885) <= 1e-9);
  CHECK(std::fabs(joint_cdf(o, 80.0, 3.5) - 0.24319285603400284) <= 1e-9);
  CHECK(std::fabs(joint_cdf(o, 150.0833102924, kTwoPi) - 1.0) <= 1e-12);

  const DistributionEval2D b(preset_scenario("B"));
  CHECK(std::fabs(joint_cdf(b, 2.0, kPi) - 0.23840293354158765) <= 1e-9);
  CHECK(std::fabs(joint_cdf(b, 4.25, kTwoPi) - 1.0) <= 1e-12);
  CHECK(std::fabs(joint_cdf(b, 1.0, 2.0) - 1.0 / 15.0) <= 1e-12);

  const DistributionEval2D a(preset_scenario("A"));
  CHECK(std::fabs(joint_cdf(a, 50.0, 1.5 * kPi) - 0.24840646307794825) <=
        1e-9);
  CHECK(std::fabs(joint_cdf(a, 100.4741883681, kTwoPi) - 1.0) <= 1e-12);
}

TEST_CASE("joint CDF degenerate arguments and domain checks") {
  const DistributionEval2D ev(preset_scenario("O"));
  CHECK(joint_cdf(ev, 0.0, kPi) == 0.0);
  CHECK(joint_cdf(ev, 50.0, 0.0) == 0.0);
  CHECK_THROWS_AS(joint_cdf(ev, -1.0, kPi), std::invalid_argument);
  CHECK_THROWS_AS(joint_cdf(ev, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(joint_cdf(ev, 1.0, kTwoPi + 0.1), std::invalid_argument);
}

TEST_CASE("joint CDF is monotone and bounded") {
  for (const char* name : {"O", "A", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    double prev_theta_row = -1.0;
    for (int i = 0; i <= 12; ++i) {
      const double r = ev.rmax * i / 12.0;
      double prev = -1.0;
      for (int j = 0; j <= 16; ++j) {
        const double theta = kTwoPi * j / 16.0;
        const double v = joint_cdf(ev, r, theta);
        REQUIRE(v >= 0.0);
        REQUIRE(v <= 1.0);
        REQUIRE(v >= prev);  // nondecreasing in theta
        prev = v;
      }
      REQUIRE(prev >= prev_theta_row);  // nondecreasing in r at theta=2pi
      prev_theta_row = prev;
    }
    CHECK(joint_cdf(ev, ev.rmax, kTwoPi) == doctest::Approx(1.0));
  }
}

TEST_CASE("joint CDF equals the angular integral of the clipped boundary") {
  for (const char* name : {"O", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    for (double rfrac : {0.35, 0.8}) {
      const double r = ev.rmax * rfrac;
      for (double theta : {1.0, kPi, 5.0}) {
        std::vector<double> pts{kHalfPi, kPi, 1.5 * kPi};
        for (const auto& iv : sector_intervals(ev.off, r).v) {
          if (!iv.empty()) {
            pts.push_back(iv.lo);
            pts.push_back(iv.hi);
          }
        }
        const auto g = [&](double phi) {
          const double c = std::min(r, beta(ev.off, phi));
          return 0.5 * c * c / ev.area;
        };
        const QuadResult q =
            integrate_with_breakpoints(g, 0.0, theta, pts, 1e-12);
        REQUIRE(q.converged);
        CHECK(std::fabs(joint_cdf(ev, r, theta) - q.value) <= 1e-9);
      }
    }
  }
}

TEST_CASE("joint density is the indicator-scaled radius") {
  const DistributionEval2D o(preset_scenario("O"));
  const double b1 = beta(o.off, 1.0);  // top wall caps this ray near 29.7
  CHECK(joint_pdf(o, 25.0, 1.0) == 25.0 / 20000.0);
  CHECK(joint_pdf(o, b1, 1.0) == b1 / 20000.0);          // support is closed
  CHECK(joint_pdf(o, b1 * (1 + 1e-9), 1.0) == 0.0);      // just outside
  CHECK(joint_pdf(o, 40.0, 1.0) == 0.0);                 // beyond that wall
  CHECK(joint_pdf(o, 80.0, 0.3) == 0.0);                 // beyond the wall
  CHECK(joint_pdf(o, 200.0, 1.0) == 0.0);                // beyond the reach
  CHECK(joint_pdf(o, 25.0, 1.0 + kTwoPi) ==
        joint_pdf(o, 25.0, 1.0));                        // angle reduction
  CHECK(joint_pdf(o, 25.0, 1.0 - kTwoPi) ==
        joint_pdf(o, 25.0, 1.0));
  const DistributionEval2D b(preset_scenario("B"));
  CHECK(joint_pdf(b, 1.0, 2.0) == 1.0 / 15.0);
}

TEST_CASE("mixed finite difference of the CDF reproduces the density") {
  const DistributionEval2D o(preset_scenario("O"));
  const double h = 1e-4;
  CHECK(std::fabs(mixed_fd(o, 80.0, 3.5, h) - joint_pdf(o, 80.0, 3.5)) <=
        1e-6);
  CHECK(std::fabs(mixed_fd(o, 25.0, 1.0, h) - joint_pdf(o, 25.0, 1.0)) <=
        1e-6);
  // At (80, 0.3) the point lies outside the support: both the density and
  // the mixed difference vanish.
  CHECK(joint_pdf(o, 80.0, 0.3) == 0.0);
  CHECK(std::fabs(mixed_fd(o, 80.0, 0.3, h)) <= 1e-6);

  const DistributionEval2D b(preset_scenario("B"));
  CHECK(std::fabs(mixed_fd(b, 1.0, 2.0, 1e-5) - joint_pdf(b, 1.0, 2.0)) <=
        1e-5);
}

TEST_CASE("azimuth marginal CDF: exact corner-area fractions") {
  const DistributionEval2D o(preset_scenario("O"));
  CHECK(std::fabs(marginal_azimuth_cdf(o, kHalfPi) - 0.0875) <= 1e-12);
  CHECK(std::fabs(marginal_azimuth_cdf(o, kPi) - 0.25) <= 1e-12);
  CHECK(std::fabs(marginal_azimuth_cdf(o, 1.5 * kPi) - 0.7375) <= 1e-12);
  CHECK(marginal_azimuth_cdf(o, 0.0) == 0.0);
  CHECK(std::fabs(marginal_azimuth_cdf(o, kTwoPi) - 1.0) <= 1e-12);

  const DistributionEval2D b(preset_scenario("B"));
  CHECK(std::fabs(marginal_azimuth_cdf(b, kPi) - 0.25) <= 1e-12);

  const DistributionEval2D a(preset_scenario("A"));
  CHECK(marginal_azimuth_cdf(a, kPi) == 0.0);
  CHECK(std::fabs(marginal_azimuth_cdf(a, 1.75 * kPi) - 0.524375) <= 1e-12);
  CHECK_THROWS_AS(marginal_azimuth_cdf(a, -0.5), std::invalid_argument);
}

TEST_CASE("marginal CDF agrees with the full-radius joint CDF") {
  for (const char* name : {"O", "A", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    for (int j = 0; j <= 24; ++j) {
      const double theta = kTwoPi * j / 24.0;
      CHECK(std::fabs(marginal_azimuth_cdf(ev, theta) -
                      joint_cdf(ev, ev.rmax, theta)) <= 1e-12);
      CHECK(std::fabs(marginal_distance_cdf(ev, ev.rmax * j / 24.0) -
                      joint_cdf(ev, ev.rmax * j / 24.0, kTwoPi)) == 0.0);
    }
  }
}

TEST_CASE("azimuth marginal density: values, symmetry-free sanity") {
  const DistributionEval2D sq(centered(2, 2));
  CHECK(std::fabs(marginal_azimuth_pdf(sq, 0.0) - 0.125) <= 1e-14);

  // A long box concentrates direction mass along its long axis.
  const DistributionEval2D wide(centered(200, 50));
  CHECK(marginal_azimuth_pdf(wide, 0.0) > marginal_azimuth_pdf(wide, kHalfPi));

  // Reference point on the top wall: no density into the upper half plane.
  const DistributionEval2D a(preset_scenario("A"));
  for (int i = 1; i < 1000; ++i) {
    const double theta = kPi * i / 1000.0;
    REQUIRE(marginal_azimuth_pdf(a, theta) == 0.0);
    REQUIRE(joint_pdf(a, 1.0, theta) == 0.0);
  }
}

TEST_CASE("azimuth marginal density matches a central difference") {
  for (const char* name : {"O", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    const double h = 1e-6;
    for (double theta : {0.3, 1.1, 2.0, 2.9, 3.7, 4.4, 5.5}) {
      const double fd = (marginal_azimuth_cdf(ev, theta + h) -
                         marginal_azimuth_cdf(ev, theta - h)) /
                        (2.0 * h);
      CHECK(std::fabs(fd - marginal_azimuth_pdf(ev, theta)) <= 1e-5);
    }
  }
}

TEST_CASE("azimuth marginal density integrates to one") {
  for (const char* name : {"O", "A", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    const auto f = [&](double t) { return marginal_azimuth_pdf(ev, t); };
    const QuadResult q = integrate_with_breakpoints(
        f, 0.0, kTwoPi, marginal_breakpoints(ev.off), 1e-9);
    REQUIRE(q.converged);
    CHECK(std::fabs(q.value - 1.0) <= 1e-6);
  }
  const DistributionEval2D sq(centered(2, 2));
  const auto f = [&](double t) { return marginal_azimuth_pdf(sq, t); };
  const QuadResult q = integrate_with_breakpoints(
      f, 0.0, kTwoPi, marginal_breakpoints(sq.off), 1e-9);
  CHECK(std::fabs(q.value - 1.0) <= 1e-6);
}

TEST_CASE("azimuth quantiles: frozen values and inverse property") {
  const DistributionEval2D o(preset_scenario("O"));
  CHECK(std::fabs(azimuth_quantile(o, 0.125) - 2.7468015338900287) <= 1e-7);
  CHECK(std::fabs(azimuth_quantile(o, 0.5) - 3.6761869770307865) <= 1e-7);
  CHECK(std::fabs(azimuth_quantile(o, 0.875) - 5.48768647719681) <= 1e-7);
  CHECK(std::fabs(azimuth_quantile(o, 0.25) - kPi) <= 1e-7);

  for (const char* name : {"O", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    for (double p : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
      const double q = azimuth_quantile(ev, p);
      CHECK(std::fabs(marginal_azimuth_cdf(ev, q) - p) <= 1e-10);
    }
  }

  CHECK(azimuth_quantile(o, 0.0) == 0.0);
  CHECK(std::fabs(azimuth_quantile(o, 1.0) - kTwoPi) <= 1e-9);
  // Leftmost semantics: scenario A has zero mass through theta = pi, so any
  // positive quantile must land beyond pi.
  const DistributionEval2D a(preset_scenario("A"));
  CHECK(azimuth_quantile(a, 1e-9) >= kPi);
  CHECK_THROWS_AS(azimuth_quantile(o, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(azimuth_quantile(o, 1.1), std::invalid_argument);
}

TEST_CASE("quadrature reference on a plain disk") {
  const auto disk = [](double) { return 1.0; };
  CHECK(std::fabs(generic_joint_cdf(disk, kPi, 1.0, kPi / 4.0) - 0.125) <=
        1e-10);
  CHECK(std::fabs(generic_joint_cdf(disk, kPi, 2.0, kTwoPi) - 1.0) <= 1e-10);
}

TEST_CASE("quadrature reference agrees with the closed form") {
  for (const char* name : {"O", "A", "B"}) {
    const DistributionEval2D ev(preset_scenario(name));
    const auto boundary = [&](double phi) { return beta(ev.off, phi); };
    for (double rfrac : {0.25, 0.6, 0.95}) {
      const double r = ev.rmax * rfrac;
      for (double theta : {0.7, kHalfPi, 2.9, 4.2, kTwoPi}) {
        const double ref = generic_joint_cdf(boundary, ev.area, r, theta);
        CHECK(std::fabs(ref - joint_cdf(ev, r, theta)) <= 1e-8);
      }
    }
  }
}

TEST_CASE("empirical CDF tracks the closed form on a coarse sweep") {
  const RectScenario s = preset_scenario("O");
  const DistributionEval2D ev(s);
  const SampleSet set = sample_points(s, 50000, 31);
  for (double rfrac : {0.3, 0.7, 1.0}) {
    for (double tfrac : {0.25, 0.5, 0.75, 1.0}) {
      const double r = ev.rmax * rfrac;
      const double theta = kTwoPi * tfrac;
      CHECK(std::fabs(joint_cdf(ev, r, theta) -
                      empirical_joint_cdf(set, r, theta)) < 0.01);
    }
  }
}
