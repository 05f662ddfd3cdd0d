#include "einstein_cyl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "einstein_cyl/error.hpp"

namespace ecyl {

QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& options) {
  using boost::math::quadrature::gauss_kronrod;
  if (!(std::isfinite(a) && std::isfinite(b))) throw Error(ErrorKind::Usage, "integration bounds must be finite");
  if (!(options.abs_tol > 0.0 || options.rel_tol > 0.0)) throw Error(ErrorKind::Usage, "tolerance must be positive");
  if (a > b) {
    QuadResult flipped = integrate(f, b, a, options);
    flipped.value = -flipped.value;
    return flipped;
  }
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  // Boost's tolerance is relative to the L1 norm; translate the absolute target.
  double coarse_error = 0.0;
  double l1 = 0.0;
  gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &coarse_error, &l1);
  const double scale = std::max(l1, std::numeric_limits<double>::min());
  const double rel = std::max({options.rel_tol, options.abs_tol / scale, 4 * std::numeric_limits<double>::epsilon()});
  double error = 0.0;
  out.value = gauss_kronrod<double, 15>::integrate(f, a, b, options.max_depth, rel, &error, &l1);
  if (!std::isfinite(out.value)) throw Error(ErrorKind::Domain, "non-finite integrand value");
  out.error = error;
  const double target = std::max(options.abs_tol, options.rel_tol * std::abs(out.value));
  out.converged = error <= target || error <= 8 * std::numeric_limits<double>::epsilon() * l1;
  return out;
}

}  // namespace ecyl
