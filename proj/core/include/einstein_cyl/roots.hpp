#pragma once

#include <array>
#include <span>
#include <vector>

#include "einstein_cyl/types.hpp"

namespace ecyl {

// Dense real polynomial, coefficients in ascending order of degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  std::span<const double> coeffs() const { return coeffs_; }
  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }

  double operator()(double x) const;
  double derivative_at(double x) const;
  Polynomial derivative() const;

  // Sum of |c_i| x^i, the natural roundoff scale of evaluating at x.
  double magnitude_at(double x) const;
  double max_abs_coeff() const;

  // Quotient of synthetic division by (x - r); the remainder is dropped.
  Polynomial deflate(double r) const;

  // Coefficients reversed: x^n p(1/x).
  Polynomial reversed(std::size_t n) const;

 private:
  std::vector<double> coeffs_;
};

// G(x) = sum g_i x^i for x = s^2. For the generating (a, C, lambda):
// g2 = 48, g3 = 2a g4, g1 = 2a g0.
struct GPoly {
  std::array<double, 5> coeffs{};

  double g0() const { return coeffs[0]; }
  double g4() const { return coeffs[4]; }
  double operator()(double x) const;
  Polynomial polynomial() const;
};

struct Root {
  double x = 0.0;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;  // positive roots, ascending
  int descartes_bound = 0;
  bool zero_root = false;   // p(0) = 0, reported as boundary data only

  int count_with_multiplicity() const;
};

struct RootOptions {
  double tol_root = 1e-12;
  double tol_mult = 1e-6;
};

int descartes_bound(const Polynomial& poly);
int descartes_bound(const GPoly& poly);

// All positive real roots with multiplicities. Isolation follows the
// derivative sequence: critical points split (0, bound] into monotone pieces,
// each sign change is bracketed and bisected, then Newton-polished.
RootSet positive_roots(const Polynomial& poly, const RootOptions& options = {});
RootSet positive_roots(const GPoly& poly, const RootOptions& options = {});

// The double positive root x0 of G on the C-lambda boundary curve and the
// nonnegative C0 at which it appears.
struct BoundaryPoint {
  double x0 = 0.0;
  double C0 = 0.0;
};

// For fixed lambda, C0 >= 0 such that G(x0) = G'(x0) = 0 for some x0 > 0.
// The curve satisfies lambda = (x0 + a)^2 / x0, C = 8a (x0^3 - a) / (3 x0 (x0 + a)).
double boundary_C0(Branch a, double lambda);
BoundaryPoint boundary_point(Branch a, double lambda);

}  // namespace ecyl
