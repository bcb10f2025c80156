#include "rectdist/applications.hpp"

#include <cmath>
#include <stdexcept>

namespace rectdist {

FadingSampler FadingSampler::unit() {
  return {[](CounterRng&) { return 1.0; }};
}

FadingSampler FadingSampler::rayleigh() {
  // |beta|^2 ~ Exp(1): inverse-CDF transform of one uniform draw.
  return {[](CounterRng& rng) { return -std::log1p(-rng.next_unit()); }};
}

std::vector<double> snr_samples(const DistributionEval3D& ev,
                                const LinkBudget& budget, const GainFn& tx_gain,
                                const GainFn& rx_gain,
                                const FadingSampler& fading, std::size_t n,
                                std::uint64_t seed) {
  if (!(budget.tau > 0.0) || !(budget.alpha >= 0.0) || !(budget.rho_t > 0.0) ||
      !(budget.n0 > 0.0)) {
    throw std::invalid_argument(
        "link budget requires tau, rho_t, n0 > 0 and alpha >= 0");
  }
  if (budget.exponent_sign != -1 && budget.exponent_sign != 1) {
    throw std::invalid_argument("exponent_sign must be -1 or +1");
  }
  if (!tx_gain || !rx_gain || !fading.draw) {
    throw std::invalid_argument("gain and fading callbacks must be set");
  }

  const RectScenario& s = ev.planar.scenario;
  const Point2 u{s.ux, s.uy};
  std::vector<double> out;
  out.reserve(n);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Point2 p;
    p.x = (rng.next_unit() - 0.5) * s.lx;
    p.y = (rng.next_unit() - 0.5) * s.ly;
    const double fade = fading.draw(rng);
    const SphericalCoord sc = cart_to_spherical(p, u, ev.uz, ev.vz);
    const double theta_rx = normalize_angle(sc.theta + kPi);
    const double psi_rx = kPi - sc.psi;
    const double gain = tx_gain(sc.theta, sc.psi) * rx_gain(theta_rx, psi_rx);
    const double loss =
        std::pow(budget.tau * sc.d, budget.exponent_sign * budget.alpha);
    out.push_back(gain * loss * fade * budget.rho_t / budget.n0);
  }
  return out;
}

Codebook design_codebook(const DistributionEval2D& ev, int m) {
  if (m < 1) throw std::invalid_argument("codebook needs at least one sector");
  Codebook cb;
  cb.boundaries.resize(static_cast<std::size_t>(m) + 1);
  cb.boundaries.front() = 0.0;
  cb.boundaries.back() = kTwoPi;
  for (int k = 1; k < m; ++k) {
    cb.boundaries[static_cast<std::size_t>(k)] =
        azimuth_quantile(ev, static_cast<double>(k) / m);
  }
  for (int k = 0; k < m; ++k) {
    if (!(cb.boundaries[k] < cb.boundaries[k + 1])) {
      throw std::logic_error("codebook boundaries must be strictly ascending");
    }
  }
  return cb;
}

RoutingChoice routing_direction(const DistributionEval2D& ev, double range,
                                double beamwidth) {
  if (!(range > 0.0)) throw std::invalid_argument("range must be positive");
  if (!(beamwidth > 0.0) || !(beamwidth <= kTwoPi)) {
    throw std::invalid_argument("beamwidth must lie in (0, 2pi]");
  }
  const double step = beamwidth / 100.0;
  const int count = static_cast<int>(std::ceil(kTwoPi / step));
  const double total = joint_cdf(ev, range, kTwoPi);

  RoutingChoice best;
  best.mass = -1.0;
  for (int k = 0; k < count; ++k) {
    const double lo = k * step;
    if (lo >= kTwoPi) break;
    const double hi = lo + beamwidth;
    double mass;
    if (hi <= kTwoPi) {
      mass = joint_cdf(ev, range, hi) - joint_cdf(ev, range, lo);
    } else {
      // Window wraps past 2pi: complement plus the wrapped head.
      mass = total - joint_cdf(ev, range, lo) +
             joint_cdf(ev, range, hi - kTwoPi);
    }
    if (mass > best.mass) {
      best.theta = lo;
      best.mass = mass;
    }
  }
  best.zero_mass = !(best.mass > 0.0);
  if (best.mass < 0.0) best.mass = 0.0;  // only from rounding at zero mass
  return best;
}

}  // namespace rectdist
