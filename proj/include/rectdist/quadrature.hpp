#pragma once

#include <functional>
#include <vector>

namespace rectdist {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // achieved absolute error estimate
  bool converged = false;
};

// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b] to absolute
// tolerance abs_tol. The per-panel error estimate is the |Kronrod - Gauss|
// difference rescaled by the integrand's variation on the panel, so mild
// endpoint singularities (e.g. square-root cusps) keep subdividing and
// converge; max_depth bounds that recursion.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_depth = 64);

// Integrate over [a, b] split at the given interior breakpoints (values
// outside (a, b) are ignored; duplicates merged). Use for integrands with
// known kinks so the adaptive rule only ever sees smooth panels.
QuadResult integrate_with_breakpoints(const std::function<double(double)>& f,
                                      double a, double b,
                                      const std::vector<double>& breakpoints,
                                      double abs_tol);

}  // namespace rectdist
