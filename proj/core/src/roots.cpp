#include "einstein_cyl/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "einstein_cyl/error.hpp"

namespace ecyl {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

int Polynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::derivative_at(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) acc = acc * x + static_cast<double>(i) * coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<double> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(static_cast<double>(i) * coeffs_[i]);
  return Polynomial(std::move(d));
}

double Polynomial::magnitude_at(double x) const {
  double acc = 0.0;
  const double ax = std::abs(x);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial Polynomial::deflate(double r) const {
  if (coeffs_.size() < 2) return Polynomial{};
  const std::size_t n = coeffs_.size() - 1;
  std::vector<double> q(n);
  double carry = coeffs_[n];
  for (std::size_t i = n; i-- > 0;) {
    q[i] = carry;
    carry = coeffs_[i] + carry * r;
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::reversed(std::size_t n) const {
  std::vector<double> r(n + 1, 0.0);
  for (std::size_t i = 0; i < coeffs_.size() && i <= n; ++i) r[n - i] = coeffs_[i];
  return Polynomial(std::move(r));
}

double GPoly::operator()(double x) const {
  return (((coeffs[4] * x + coeffs[3]) * x + coeffs[2]) * x + coeffs[1]) * x + coeffs[0];
}

Polynomial GPoly::polynomial() const {
  return Polynomial(std::vector<double>(coeffs.begin(), coeffs.end()));
}

int RootSet::count_with_multiplicity() const {
  int n = 0;
  for (const auto& r : roots) n += r.multiplicity;
  return n;
}

int descartes_bound(const Polynomial& poly) {
  if (poly.is_zero()) throw Error(ErrorKind::Invalid, "Descartes bound of the zero polynomial");
  int changes = 0;
  int last = 0;
  for (double c : poly.coeffs()) {
    if (c == 0.0) continue;
    const int sgn = c > 0 ? 1 : -1;
    if (last != 0 && sgn != last) ++changes;
    last = sgn;
  }
  return changes;
}

int descartes_bound(const GPoly& poly) { return descartes_bound(poly.polynomial()); }

namespace {

int sign_at(const Polynomial& p, double x, double tol) {
  const double v = p(x);
  if (std::abs(v) <= tol * p.magnitude_at(x)) return 0;
  return v > 0 ? 1 : -1;
}

// Bisection on a bracket where p changes sign, then guarded Newton.
double refine_root(const Polynomial& p, double lo, double hi) {
  double flo = p(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const double d = p.derivative_at(x);
    if (d == 0.0) break;
    const double next = x - p(x) / d;
    if (!(next >= lo && next <= hi)) break;
    x = next;
  }
  return x;
}

double cauchy_bound(const Polynomial& p) {
  const auto c = p.coeffs();
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, std::abs(c[i]) / lead);
  return 1.0 + std::max(1.0, m);
}

// Roots of p in (lo, hi), with multiplicities, ascending.
std::vector<Root> roots_between(const Polynomial& p, double lo, double hi, const RootOptions& opt) {
  std::vector<Root> out;
  const int deg = p.degree();
  if (deg <= 0) return out;
  if (deg == 1) {
    const auto c = p.coeffs();
    const double x = -c[0] / c[1];
    if (x > lo && x < hi) out.push_back({x, 1});
    return out;
  }

  const Polynomial dp = p.derivative();
  const std::vector<Root> crit = roots_between(dp, lo, hi, opt);

  // Critical points where p also vanishes are multiple roots.
  std::vector<double> breaks{lo};
  std::vector<int> signs{sign_at(p, lo, opt.tol_root)};
  for (const auto& c : crit) {
    const int sgn = sign_at(p, c.x, opt.tol_root);
    if (sgn == 0) out.push_back({c.x, c.multiplicity + 1});
    breaks.push_back(c.x);
    signs.push_back(sgn);
  }
  breaks.push_back(hi);
  signs.push_back(sign_at(p, hi, opt.tol_root));

  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    if (signs[k] == 0 || signs[k + 1] == 0 || signs[k] == signs[k + 1]) continue;
    const double x = refine_root(p, breaks[k], breaks[k + 1]);
    int mult = 1;
    const double dscale = dp.magnitude_at(x);
    if (dscale > 0 && std::abs(dp(x)) < opt.tol_mult * dscale) mult = 2;
    out.push_back({x, mult});
  }

  std::sort(out.begin(), out.end(), [](const Root& l, const Root& r) { return l.x < r.x; });
  std::vector<Root> merged;
  for (const auto& r : out) {
    if (!merged.empty() && std::abs(r.x - merged.back().x) <= 1e-12 * std::max(1.0, std::abs(r.x))) {
      merged.back().multiplicity = std::max(merged.back().multiplicity, r.multiplicity);
      continue;
    }
    merged.push_back(r);
  }
  return merged;
}

}  // namespace

RootSet positive_roots(const Polynomial& poly, const RootOptions& options) {
  if (!(options.tol_root > 0.0)) throw Error(ErrorKind::Usage, "tol_root must be positive");
  RootSet set;
  if (poly.is_zero()) return set;
  set.descartes_bound = descartes_bound(poly);
  set.zero_root = poly.coeffs()[0] == 0.0;
  if (poly.degree() < 1) return set;
  const double bound = cauchy_bound(poly);
  set.roots = roots_between(poly, 0.0, bound, options);
  return set;
}

RootSet positive_roots(const GPoly& poly, const RootOptions& options) {
  return positive_roots(poly.polynomial(), options);
}

BoundaryPoint boundary_point(Branch a, double lambda) {
  if (a == Branch::Zero) throw Error(ErrorKind::Usage, "boundary_C0 requires a = +-1");
  const double av = value_of(a);
  const double radicand = lambda * lambda - 4.0 * av * lambda;
  if (radicand < 0.0) {
    throw Error(ErrorKind::NoBoundary, "lambda^2 - 4 a lambda < 0: G has no double positive root");
  }
  const double sum = lambda - 2.0 * av;  // x0 + 1/x0 = lambda - 2a
  if (!(sum > 0.0)) throw Error(ErrorKind::NoBoundary, "boundary double root would be non-positive");
  const double root = std::sqrt(radicand);
  // Product of the two candidates is 1; pick the one with C >= 0
  // (x0 >= 1 for a = 1, x0 <= 1 for a = -1).
  const double big = 0.5 * (sum + root);
  const double small = 1.0 / big;
  const double x0 = a == Branch::Plus ? big : small;
  if (a == Branch::Minus && x0 == 1.0) {
    throw Error(ErrorKind::NoBoundary, "double root collides with the pole s = 1");
  }
  const double C = 8.0 * av * (x0 * x0 * x0 - av) / (3.0 * x0 * (x0 + av));
  return {x0, std::abs(C)};
}

double boundary_C0(Branch a, double lambda) { return boundary_point(a, lambda).C0; }

}  // namespace ecyl
