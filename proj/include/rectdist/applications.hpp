#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rectdist/dist2d.hpp"
#include "rectdist/dist3d.hpp"
#include "rectdist/montecarlo.hpp"

namespace rectdist {

// Link-budget parameters for SNR evaluation: snr = gt * gr *
// (tau * d)^(exponent_sign * alpha) * |fade|^2 * rho_t / n0.
// exponent_sign defaults to -1 (received power decays with distance);
// +1 is selectable for studies that want the literal growing form.
struct LinkBudget {
  double tau = 1.0;
  double alpha = 2.0;
  double rho_t = 1.0;
  double n0 = 1.0;
  int exponent_sign = -1;
};

// Antenna gain as a function of (azimuth, zenith) of the ray.
using GainFn = std::function<double(double theta, double psi)>;

// Power-fading sampler |beta|^2. Draws consume the caller's RNG stream.
struct FadingSampler {
  std::function<double(CounterRng&)> draw;

  static FadingSampler unit();      // no fading: constant 1
  static FadingSampler rayleigh();  // unit-mean exponential power
};

// SNR of the link from the reference antenna to n uniformly random nodes.
// Transmit gain is evaluated at the node's (theta, psi); receive gain at the
// reciprocal bearing (theta + pi mod 2pi, pi - psi). Per node the draw order
// is x, y, fading variate. Deterministic in (scenario, seed).
std::vector<double> snr_samples(const DistributionEval3D& ev,
                                const LinkBudget& budget, const GainFn& tx_gain,
                                const GainFn& rx_gain,
                                const FadingSampler& fading, std::size_t n,
                                std::uint64_t seed);

// Azimuth sector boundaries 0 = b(0) < b(1) < ... < b(m) = 2pi such that
// each sector [b(k), b(k+1)) carries azimuth mass exactly 1/m.
struct Codebook {
  std::vector<double> boundaries;
  int sectors() const { return static_cast<int>(boundaries.size()) - 1; }
};

// Equal-probability sectorization of the azimuth marginal: interior
// boundaries are the leftmost k/m quantiles.
Codebook design_codebook(const DistributionEval2D& ev, int m);

struct RoutingChoice {
  double theta = 0.0;   // window start angle
  double mass = 0.0;    // probability of a node within range in the window
  bool zero_mass = false;
};

// Beam-steering helper: the window start angle maximizing
// P(R <= range, Theta in [theta, theta + beamwidth)), scanned over a grid
// of step beamwidth/100 with wraparound; ties resolve to the smallest
// angle. zero_mass flags a degenerate scenario where no window sees any
// probability at all.
RoutingChoice routing_direction(const DistributionEval2D& ev, double range,
                                double beamwidth);

}  // namespace rectdist
