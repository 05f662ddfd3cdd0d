#pragma once

#include <functional>

namespace ecyl {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // estimate of |value - exact|
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  unsigned max_depth = 30;
};

// Adaptive Gauss-Kronrod 7/15 on a finite [a, b] (either orientation).
// Endpoints are never evaluated, so integrable endpoint singularities that
// have been smoothed by a substitution are safe.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& options = {});

}  // namespace ecyl
