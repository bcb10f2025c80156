#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rectdist/geometry.hpp"

namespace rectdist {

// Deterministic 64-bit generator with a counter-style state: the state
// advances by a fixed odd increment each draw, so the k-th output is a pure
// function of (seed, k) — mix(seed + (k+1) * 0x9E3779B97F4A7C15) with the
// standard SplitMix64 finalizer. Identical sequences on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1): top 53 bits over 2^53.
  double next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// A reproducible draw of uniform points in the scenario rectangle, with the
// polar coordinates about the reference point precomputed.
struct SampleSet {
  RectScenario scenario;
  std::uint64_t seed = 0;
  std::vector<Point2> points;
  std::vector<PolarCoord> polar;
};

// Draws n points; per point x is drawn before y (part of the determinism
// contract — reordering would silently change every downstream number).
SampleSet sample_points(const RectScenario& s, std::size_t n,
                        std::uint64_t seed);

// Fraction of samples with distance <= r and azimuth <= theta.
double empirical_joint_cdf(const SampleSet& set, double r, double theta);

// Fraction with azimuth <= theta.
double empirical_azimuth_cdf(const SampleSet& set, double theta);

// Fraction with slant distance <= d, azimuth <= theta, zenith <= psi, for
// nodes at height vz seen from the reference antenna at scenario.uz.
double empirical_joint_cdf_3d(const SampleSet& set, double vz, double d,
                              double theta, double psi);

// Pearson chi-square statistic of the sample against uniform occupancy of
// an nx-by-ny grid of equal-area cells.
double chi_square_uniformity(const SampleSet& set, int nx, int ny);

struct ValidationRow {
  bool is3d = false;
  double r = 0.0;      // planar distance (2D rows) or slant distance (3D)
  double theta = 0.0;
  double psi = 0.0;    // meaningful only when is3d
  double analytic = 0.0;
  double empirical = 0.0;
  double abs_dev = 0.0;
};

struct ValidationReport {
  RectScenario scenario;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<ValidationRow> rows;
  double sup_deviation = 0.0;
};

// Compares the closed-form CDFs against one empirical draw of n points on
// the default query grid: 20 radii spanning (0, r_max] crossed with 20
// evenly spaced angles plus 12 mid-quadrant angles, and — when the scenario
// has a node height — 20 slant distances crossed with angle/zenith pairs
// covering the zenith support quartiles.
ValidationReport validate(const RectScenario& s, std::size_t n,
                          std::uint64_t seed);

// CSV with columns kind,r,theta,psi,analytic,empirical,abs_dev; psi is left
// blank on planar rows.
void write_validation_csv(const ValidationReport& rep, std::ostream& os);

}  // namespace rectdist
