#include "rectdist/dist2d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rectdist/quadrature.hpp"

namespace rectdist {

namespace {

void require_theta(double theta) {
  if (!(theta >= 0.0) || !(theta <= kTwoPi)) {
    throw std::invalid_argument("theta must lie in [0, 2pi]");
  }
}

void require_r(double r) {
  if (!(r >= 0.0)) {  // rejects NaN and negatives; +inf is allowed and
                      // saturates at the farthest corner
    throw std::invalid_argument("r must be nonnegative");
  }
}

double tan_fn(double x) { return std::tan(x); }
double cot_fn(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

DistributionEval2D::DistributionEval2D(const RectScenario& s)
    : scenario(s), off(offsets(s)), area(s.lx * s.ly), rmax(r_max(off)) {}

double joint_cdf(const DistributionEval2D& ev, double r, double theta) {
  require_r(r);
  require_theta(theta);
  if (r == 0.0 || theta == 0.0) return 0.0;
  r = std::min(r, ev.rmax);

  const auto h = ev.off.h();
  const IntervalSet sectors = sector_intervals(ev.off, r);
  const IntervalSet walls = wall_intervals(ev.off, r);

  double acc = 0.0;
  for (const auto& iv : sectors.v) {
    acc += r * r * positive_part(std::min(theta, iv.hi) - iv.lo);
  }
  for (int i = 0; i < 8; ++i) {
    // Wall terms only exist once the radius reaches the wall; zero offsets
    // contribute nothing and would otherwise evaluate tan/cot at their
    // singularities (0 * inf).
    if (h[i] == 0.0 || r < h[i]) continue;
    const auto& iv = walls.v[i];
    const double b = std::min(theta, iv.hi);
    if (i < 4) {
      acc += h[i] * h[i] * f_op(tan_fn, iv.lo, b);
    } else {
      acc -= h[i] * h[i] * f_op(cot_fn, iv.lo, b);
    }
  }
  return detail::clamp_probability(acc / (2.0 * ev.area));
}

double joint_pdf(const DistributionEval2D& ev, double r, double theta) {
  require_r(r);
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("theta must be finite");
  }
  if (r == 0.0 || !std::isfinite(r)) return 0.0;
  const double a = normalize_angle(theta);
  return (r <= beta(ev.off, a)) ? r / ev.area : 0.0;
}

double marginal_azimuth_cdf(const DistributionEval2D& ev, double theta) {
  require_theta(theta);
  if (theta == 0.0) return 0.0;

  const auto h = ev.off.h();
  const IntervalSet walls = wall_intervals_full(ev.off);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (h[i] == 0.0) continue;
    const auto& iv = walls.v[i];
    const double b = std::min(theta, iv.hi);
    if (i < 4) {
      acc += h[i] * h[i] * f_op(tan_fn, iv.lo, b);
    } else {
      acc -= h[i] * h[i] * f_op(cot_fn, iv.lo, b);
    }
  }
  return detail::clamp_probability(acc / (2.0 * ev.area));
}

double marginal_azimuth_pdf(const DistributionEval2D& ev, double theta) {
  require_theta(theta);
  const double a = normalize_angle(theta);

  const auto h = ev.off.h();
  const IntervalSet walls = wall_intervals_full(ev.off);
  double acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    if (h[i] == 0.0) continue;
    const auto& iv = walls.v[i];
    if (!(a >= iv.lo) || !(a < iv.hi)) continue;  // left-closed attribution
    // Differentiating the CDF's wall terms: d/dtheta tan = 1/cos^2 and
    // d/dtheta (-cot) = 1/sin^2, so both families contribute positively.
    const double t = (i < 4) ? std::cos(a) : std::sin(a);
    acc += h[i] * h[i] / (t * t);
  }
  const double f = acc / (2.0 * ev.area);
  if (!(f >= 0.0)) {
    throw std::logic_error("azimuth density must be nonnegative");
  }
  return f;
}

double marginal_distance_cdf(const DistributionEval2D& ev, double r) {
  return joint_cdf(ev, r, kTwoPi);
}

double azimuth_quantile(const DistributionEval2D& ev, double p) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument("quantile level must lie in [0, 1]");
  }
  if (p <= 0.0) return 0.0;
  // Bisection keeping cdf(lo) < p <= cdf(hi); converges to the leftmost
  // angle reaching p (flat spans snap to their left edge).
  double lo = 0.0;
  double hi = kTwoPi;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (marginal_azimuth_cdf(ev, mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double generic_joint_cdf(const std::function<double(double)>& boundary,
                         double area, double r, double theta, double abs_tol) {
  if (!(area > 0.0)) throw std::invalid_argument("area must be positive");
  require_r(r);
  require_theta(theta);
  if (r == 0.0 || theta == 0.0) return 0.0;

  // Split at quadrant edges, wherever boundary(phi) - r changes sign (the
  // clipped radius min(r, boundary) has a kink at each crossing), and at
  // interior extrema of the clipped radius: a peak of the boundary (e.g. a
  // corner direction of a rectangle) is a slope discontinuity even when the
  // cap never engages, and a panel straddling it can fool the error estimate.
  std::vector<double> pts;
  for (double q : {kHalfPi, kPi, 1.5 * kPi}) {
    if (q < theta) pts.push_back(q);
  }
  constexpr int kScan = 4096;
  std::vector<double> vals(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    vals[i] = boundary(theta * i / kScan);
  }
  for (int i = 1; i <= kScan; ++i) {
    const double prev = vals[i - 1] - r;
    const double cur = vals[i] - r;
    if ((cur > 0.0) != (prev > 0.0)) {
      double a = theta * (i - 1) / kScan;
      double b = theta * i / kScan;
      for (int it = 0; it < 100 && b - a > 1e-15; ++it) {
        const double m = 0.5 * (a + b);
        if ((boundary(m) - r > 0.0) == (prev > 0.0)) {
          a = m;
        } else {
          b = m;
        }
      }
      pts.push_back(0.5 * (a + b));
    }
  }
  const auto clipped = [&](double phi) { return std::min(r, boundary(phi)); };
  const double kGolden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int i = 1; i < kScan; ++i) {
    const double g0 = std::min(r, vals[i - 1]);
    const double g1 = std::min(r, vals[i]);
    const double g2 = std::min(r, vals[i + 1]);
    const bool is_max = g1 > g0 && g1 > g2;
    const bool is_min = g1 < g0 && g1 < g2;
    if (!is_max && !is_min) continue;
    const double s = is_max ? 1.0 : -1.0;
    // Golden-section refinement so the panel split lands on the extremum.
    double a = theta * (i - 1) / kScan;
    double b = theta * (i + 1) / kScan;
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double fc = s * clipped(c);
    double fd = s * clipped(d);
    while (b - a > 1e-13) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kGolden * (b - a);
        fc = s * clipped(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kGolden * (b - a);
        fd = s * clipped(d);
      }
    }
    pts.push_back(0.5 * (a + b));
  }

  const auto integrand = [&](double phi) {
    const double m = std::min(r, boundary(phi));
    return 0.5 * m * m / area;
  };
  const QuadResult q =
      integrate_with_breakpoints(integrand, 0.0, theta, pts, abs_tol);
  if (!q.converged) {
    std::ostringstream msg;
    msg << "quadrature did not reach tolerance " << abs_tol
        << " (achieved error estimate " << q.error << ")";
    throw std::runtime_error(msg.str());
  }
  return detail::clamp_probability(q.value);
}

}  // namespace rectdist
