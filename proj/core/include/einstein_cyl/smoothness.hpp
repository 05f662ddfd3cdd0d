#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "einstein_cyl/domain.hpp"
#include "einstein_cyl/types.hpp"

namespace ecyl {

// |f'| at a collapse must lie within this distance of an integer.
inline constexpr double kOrderWindow = 1e-6;

// df/dt at a root z of G(s^2), a = +-1:
// [(24+3C-8a lambda)(2z^6+3az^4) + 48z^2 + a(24-3C-8a lambda)] / (24 z^2).
double df_dt_at_root(Branch a, double C, double lambda, double z);

// a = 0 analogue at a root z of s^2 f^2: df/dt = 1 - lambda z^2 / 3 - C / z^4.
double df_dt_at_root_a0(double C, double lambda, double z);

struct CLambda {
  double C = 0.0;
  double lambda = 0.0;
};

// lambda = [(2+n)z^4 + 4az^2 + (2-n)] / (2z^2), then C from G(z^2) = 0:
// C = [(24-8a lambda)(z^8+2az^6+2az^2+1) + 48z^4] / [-3(z^8+2az^6-2az^2-1)].
CLambda c_lambda_from_root(Branch a, double z, int n);

// The C solving G(z^2) = 0 at fixed lambda.
double c_from_root(Branch a, double lambda, double z);

// Lambda solving df/dt = n at a root z.
double lambda_from_root(Branch a, double z, int n);

// Second root of a two-root closure with orders (n, -n) at the lambda of (z1, n):
// z2 = sqrt((2+n)/(2-n)) z1.
double companion_root(double z1, int n);

// C1 - C2 = 32 n^3 z1^4 / [3 (z1^2+a)^2 ((2+n) z1^2 + a(2-n))^2], the
// difference of c_from_root at z1 and at companion_root(z1, n).
double two_root_obstruction(Branch a, double z1, int n);

enum class EndpointKind {
  RoundCollapse,     // f, h -> 0, |f'| = |h'| = 1
  BoltCollapse,      // f -> 0, h -> h0 > 0, |f'| = 1
  OrbifoldCollapse,  // f -> 0, h -> h0 > 0, |f'| = n >= 2
  ConicalCollapse,   // f -> 0 with non-integer |f'|
  InfiniteEnd,       // t -> +-inf
  IncompleteBlowup,  // f -> inf at finite t
};

std::string_view to_string(EndpointKind kind);

struct EndpointReport {
  double s = 0.0;                  // 0, a root, 1 or inf
  EndKind end = EndKind::Zero;
  double t = 0.0;                  // +-inf for infinite ends
  EndpointKind kind = EndpointKind::InfiniteEnd;
  std::optional<int> n;            // collapse order for finite collapses
  double df_dt = kNaN;             // limits along increasing t; NaN when undefined
  double dh_dt = kNaN;
  double h = kNaN;
  std::string note;
};

// Reports for the lower and upper end of a maximal positivity interval. The
// t-origin is the lower end when it is at finite distance, otherwise the upper
// end; both infinite gives t = -inf and +inf.
std::vector<EndpointReport> endpoint_analysis(const ModelParams& params, const SInterval& interval);

// Whether the collapse order |df_dt| is an integer within kOrderWindow.
std::optional<int> collapse_order(double df_dt);

}  // namespace ecyl
