#include "rectdist/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace rectdist {

namespace {

// Nodes/weights of the 15-point Kronrod extension of the 7-point Gauss rule
// (the classic QUADPACK dqk15 constants; nodes are +-xgk[i]).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Panel {
  double kronrod;
  double err;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  const double fc = f(mid);
  double fv[15];
  fv[7] = fc;
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double flo = f(mid - dx);
    const double fhi = f(mid + dx);
    fv[i] = flo;
    fv[14 - i] = fhi;
    kron += kWgk[i] * (flo + fhi);
    if (i % 2 == 1) gauss += kWg[i / 2] * (flo + fhi);
  }
  // Spread of f around its mean over the panel; the raw |K - G| difference
  // underestimates the error badly when the integrand has a kink inside
  // the panel, so scale it the way dqk15 does.
  const double mean = 0.5 * kron;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int i = 0; i < 7; ++i) {
    resasc +=
        kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }
  resasc *= std::fabs(half);
  kron *= half;
  gauss *= half;
  // Rescale the raw |Kronrod - Gauss| difference by the variation of the
  // integrand (the classic dqk15 heuristic): on rough panels the raw
  // difference underestimates the true error of the Kronrod value, and on
  // smooth panels it grossly overestimates it.
  double err = std::fabs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  return {kron, err};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, QuadResult& out) {
  const Panel p = gk15(f, a, b);
  if (p.err <= tol || depth <= 0) {
    out.value += p.kronrod;
    out.error += p.err;
    if (p.err > tol) out.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth - 1, out);
  adapt(f, mid, b, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_depth) {
  QuadResult out;
  out.converged = true;
  if (!(b > a)) return out;
  adapt(f, a, b, abs_tol, max_depth, out);
  return out;
}

QuadResult integrate_with_breakpoints(const std::function<double(double)>& f,
                                      double a, double b,
                                      const std::vector<double>& breakpoints,
                                      double abs_tol) {
  QuadResult out;
  out.converged = true;
  if (!(b > a)) return out;
  std::vector<double> pts{a, b};
  for (double p : breakpoints) {
    if (p > a && p < b) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const double panel_tol = abs_tol / static_cast<double>(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    QuadResult piece = integrate(f, pts[i], pts[i + 1], panel_tol);
    out.value += piece.value;
    out.error += piece.error;
    out.converged = out.converged && piece.converged;
  }
  return out;
}

}  // namespace rectdist
