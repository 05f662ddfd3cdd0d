#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "einstein_cyl/roots.hpp"
#include "einstein_cyl/types.hpp"

namespace ecyl {

// ---------------------------------------------------------------------------
// h-branches and the a = 0 fiber function
// ---------------------------------------------------------------------------

// h(r): e^r for a = 0, sech r for a = 1, csch r for a = -1 (r > 0 required).
double eval_h(Branch a, double r);

// f(r) = sqrt(-lambda/6 e^{4r} + e^{2r} + C e^{-2r}) for a = 0; 0 on the boundary
// of the domain (radicand zero to roundoff), an error beyond it.
double eval_f_a0(double r, double C, double lambda);

// ---------------------------------------------------------------------------
// The quartic G(x), x = s^2, for a = +-1
// ---------------------------------------------------------------------------

// g4 = 24 + 3C - 8a lambda, g3 = 2a g4, g2 = 48, g1 = 2a g0, g0 = 24 - 3C - 8a lambda.
GPoly g_poly(const ModelParams& params);

// Relative width of the band in which 24 +- 3C - 8a lambda (a = +-1) or C
// (a = 0) is treated as exactly zero.
inline constexpr double kTieBand = 1e-9;

// g_poly with g0/g4 snapped to zero inside the tie band, so boundary regimes
// (G(0) = 0, deg G = 2) are represented exactly.
GPoly model_poly(const ModelParams& params);

// a = 0: s^2 f^2 = -lambda/6 x^3 + x^2 + C as a polynomial in x = s^2
// (C snapped to zero inside the tie band).
Polynomial a0_radicand(const ModelParams& params);

// Whether 24 - 3C - 8a lambda (which = 0) or 24 + 3C - 8a lambda (which = 4)
// lies inside the tie band.
bool is_tie(const ModelParams& params, int which);

struct MetricComponents {
  double f = 0.0;
  double h = 0.0;
  double dt_ds = 0.0;
};

// f^2 = G(s^2) / (12 s^2 (s^2+a)^2), h = 2s/|s^2+a|, dt/ds = 8 sqrt(3) s^2 / (|s^2+a| sqrt(G)).
// For a = 0 the same triple from f = sqrt(s^2 f^2) / s, h = s, dt/ds = s/f.
MetricComponents metric_components(const ModelParams& params, double s);

// Full profile state at s (derivatives in t by the exact chain rule); t is
// left NaN, reparam fills it in.
ProfileSample state_at(const ModelParams& params, double s);

// A positive root x_r = z^2 of the radicand (G for a = +-1, s^2 f^2 for a = 0)
// together with the quotient radicand / (x - x_r)^multiplicity.
struct RootFactor {
  double z = 0.0;
  int multiplicity = 1;
  Polynomial quotient;
};

RootFactor factor_root(const Polynomial& radicand, double z, int multiplicity);

// The radicand as a polynomial in x = s^2: model_poly for a = +-1, a0_radicand for a = 0.
Polynomial radicand(const ModelParams& params);

// state_at with the radicand evaluated as (x - z^2)^m Q(x), which keeps f and
// its derivatives accurate close to the root.
ProfileSample state_at(const ModelParams& params, double s, const RootFactor& near);

// ---------------------------------------------------------------------------
// Normalization and case identification
// ---------------------------------------------------------------------------

struct NormalizedParams {
  ModelParams params;
  bool flipped = false;     // a = +-1: s -> 1/s applied, C -> -C
  double scale = 1.0;       // a = 0: metric rescaled by scale^2, lambda -> lambda / scale^2
};

// a = +-1: C >= 0 via s -> 1/s. a = 0: |lambda| in {0, 6}.
NormalizedParams normalize(const ModelParams& params);

// Case identifier ("3.1" ... "3.9", "5.1" ... "5.3", "6.1" ... "6.8") for
// normalized parameters.
std::string case_id_for(const ModelParams& normalized);

// ---------------------------------------------------------------------------
// Named solutions
// ---------------------------------------------------------------------------

// Solutions with an explicit t-formula.
enum class ClosedForm {
  Flat,               // f = h = t
  FubiniStudy,        // f = sin(2t)/2, h = sin t, lambda = 6
  ComplexHyperbolic,  // f = sinh t cosh t, h = sinh t, lambda = -6
  Sphere4,            // f = h = sin t, lambda = 3
  RealHyperbolic,     // f = h = sinh t, lambda = -3
};

std::string_view to_string(ClosedForm form);

// Sample of a closed form, all derivatives exact.
ProfileSample closed_form_sample(ClosedForm form, double t);

// The t-interval of a closed form (upper end may be +inf).
struct TRange {
  double lo = 0.0;
  double hi = kInf;
};
TRange closed_form_t_range(ClosedForm form);

struct SolutionFamily {
  ModelParams params;
  SInterval s_interval;
  std::optional<ClosedForm> closed_form;
  std::optional<std::string> label;
  std::string case_id;
  // D convention: Eguchi-Hanson uses D = (-C)^{1/4}, the a = 0 orbifolds use
  // D = -C.
  std::optional<double> D;
  std::string notes;
};

enum class SolutionName {
  Flat,
  FubiniStudy,
  ComplexHyperbolic,
  EguchiHanson,   // uses D
  Sphere4,
  Page,
  RealHyperbolic,
  OrbifoldA0,     // uses n >= 3
  FamilyA1Z,      // uses z, n
  FamilyAm1Z,     // uses z, n
  FamilyC24,      // uses lambda
};

struct SolutionRequest {
  SolutionName name = SolutionName::Flat;
  double D = 1.0;
  int n = 3;
  double z = 0.5;
  double lambda = 0.0;
};

SolutionFamily named_solution(const SolutionRequest& request);
SolutionFamily named_solution(SolutionName name);

std::optional<SolutionName> parse_solution_name(std::string_view name);
std::string_view to_string(SolutionName name);

// Page metric: a = 1, C = 0, roots z1 < 1 < z2 of G(s^2) with z1 z2 = 1 and
// df/dt = +-1 there.
struct PageRoots {
  double z1 = 0.0;
  double z2 = 0.0;
  double lambda = 0.0;
  // The cubic-formula expression 1/2 sqrt(y) + 1/2 sqrt(-y + 8/sqrt(y)),
  // y = 2(cbrt(1+sqrt 2) + cbrt(1-sqrt 2)); equals z2^2.
  double x2 = 0.0;
};

PageRoots page_roots();

// Orbifold family at a = 0, lambda = -6: D = (n-2)^2/9 + (n-2)^3/27, n >= 3.
double orbifold_D(int n);

// a = 0, lambda = 6, C < 0: the two collapse conditions force
// 6(4-n)^2 - (4-n)^3 = 6(4+n)^2 - (4+n)^3. Returns whether that holds.
bool nonexistence_39_check(int n);

struct EquationSides {
  double lhs = 0.0;
  double rhs = 0.0;
};
EquationSides nonexistence_39_sides(int n);

}  // namespace ecyl
