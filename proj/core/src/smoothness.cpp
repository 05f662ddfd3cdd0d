#include "einstein_cyl/smoothness.hpp"

#include <cmath>

#include "einstein_cyl/error.hpp"
#include "einstein_cyl/reparam.hpp"

namespace ecyl {

namespace {

void require_pm(Branch a, const char* what) {
  if (a == Branch::Zero) throw Error(ErrorKind::Usage, std::string(what) + " requires a = +-1");
}

}  // namespace

double df_dt_at_root(Branch a, double C, double lambda, double z) {
  require_pm(a, "df_dt_at_root");
  if (!(z > 0.0)) throw Error(ErrorKind::Invalid, "root z must be positive");
  const double av = value_of(a);
  const double g4 = 24.0 + 3.0 * C - 8.0 * av * lambda;
  const double g0 = 24.0 - 3.0 * C - 8.0 * av * lambda;
  const double z2 = z * z;
  const double z4 = z2 * z2;
  return (g4 * (2.0 * z4 * z2 + 3.0 * av * z4) + 48.0 * z2 + av * g0) / (24.0 * z2);
}

double df_dt_at_root_a0(double C, double lambda, double z) {
  if (!(z > 0.0)) throw Error(ErrorKind::Invalid, "root z must be positive");
  const double z2 = z * z;
  return 1.0 - lambda * z2 / 3.0 - C / (z2 * z2);
}

double lambda_from_root(Branch a, double z, int n) {
  require_pm(a, "lambda_from_root");
  if (!(z > 0.0)) throw Error(ErrorKind::Invalid, "root z must be positive");
  const double z2 = z * z;
  return ((2.0 + n) * z2 * z2 + 4.0 * value_of(a) * z2 + (2.0 - n)) / (2.0 * z2);
}

double c_from_root(Branch a, double lambda, double z) {
  require_pm(a, "c_from_root");
  if (!(z > 0.0)) throw Error(ErrorKind::Invalid, "root z must be positive");
  if (z == 1.0) throw Error(ErrorKind::Degenerate, "z = 1 leaves C undetermined");
  const double av = value_of(a);
  const double z2 = z * z;
  const double z4 = z2 * z2;
  const double z6 = z4 * z2;
  const double z8 = z4 * z4;
  const double num = (24.0 - 8.0 * av * lambda) * (z8 + 2.0 * av * z6 + 2.0 * av * z2 + 1.0) + 48.0 * z4;
  const double den = -3.0 * (z8 + 2.0 * av * z6 - 2.0 * av * z2 - 1.0);
  if (den == 0.0) throw Error(ErrorKind::Degenerate, "z^2 + a = 0 leaves C undetermined");
  return num / den;
}

CLambda c_lambda_from_root(Branch a, double z, int n) {
  require_pm(a, "c_lambda_from_root");
  if (!(z > 0.0)) throw Error(ErrorKind::Invalid, "root z must be positive");
  if (z == 1.0) throw Error(ErrorKind::Degenerate, "z = 1 leaves C undetermined");
  if (a == Branch::Minus) {
    const double z2 = z * z;
    if (n == 1 && z2 < 1.0 / 3.0) throw Error(ErrorKind::OutOfRange, "a = -1, n = 1 requires z^2 >= 1/3");
    if (n == -1 && z2 > 3.0) throw Error(ErrorKind::OutOfRange, "a = -1, n = -1 requires z^2 <= 3");
  }
  const double lambda = lambda_from_root(a, z, n);
  return {c_from_root(a, lambda, z), lambda};
}

double companion_root(double z1, int n) {
  if ((2 - n) * (2 + n) <= 0) throw Error(ErrorKind::SingularConfiguration, "companion root needs |n| < 2");
  return std::sqrt((2.0 + n) / (2.0 - n)) * z1;
}

double two_root_obstruction(Branch a, double z1, int n) {
  require_pm(a, "two_root_obstruction");
  if (!(z1 > 0.0)) throw Error(ErrorKind::Invalid, "root z1 must be positive");
  if ((2 - n) * (2 + n) <= 0) throw Error(ErrorKind::SingularConfiguration, "companion root needs |n| < 2");
  const double av = value_of(a);
  const double z2 = z1 * z1;
  const double p = z2 + av;
  const double q = (2.0 + n) * z2 + av * (2.0 - n);
  const double den = 3.0 * p * p * q * q;
  if (den == 0.0) throw Error(ErrorKind::SingularConfiguration, "C1 - C2 denominator vanishes");
  return 32.0 * n * n * n * z2 * z2 / den;
}

std::optional<int> collapse_order(double df_dt) {
  if (!std::isfinite(df_dt)) return std::nullopt;
  const double m = std::abs(df_dt);
  const double n = std::round(m);
  if (n < 1.0 || std::abs(m - n) > kOrderWindow) return std::nullopt;
  return static_cast<int>(n);
}

std::string_view to_string(EndpointKind kind) {
  switch (kind) {
    case EndpointKind::RoundCollapse: return "round_collapse";
    case EndpointKind::BoltCollapse: return "bolt_collapse";
    case EndpointKind::OrbifoldCollapse: return "orbifold_collapse";
    case EndpointKind::ConicalCollapse: return "conical_collapse";
    case EndpointKind::InfiniteEnd: return "infinite_end";
    case EndpointKind::IncompleteBlowup: return "incomplete_blowup";
  }
  return "unknown";
}

namespace {

EndpointReport analyse_end(const ModelParams& p, const IntervalEnd& end, bool lower) {
  EndpointReport r;
  r.s = end.s;
  r.end = end.kind;
  const double sign = lower ? 1.0 : -1.0;
  switch (end.kind) {
    case EndKind::Zero:
    case EndKind::Infinity: {
      if (p.a == Branch::Zero && end.kind == EndKind::Infinity) {
        r.kind = EndpointKind::InfiniteEnd;
        r.h = kInf;
        break;
      }
      // Leading behaviour: G(0) = g0 at s -> 0, x^4 g4 at s -> inf (a = 0: C at s -> 0).
      double lead = 0.0;
      if (p.a == Branch::Zero) {
        lead = a0_radicand(p)(0.0);
      } else {
        const GPoly g = model_poly(p);
        lead = end.kind == EndKind::Zero ? g.g0() : g.g4();
      }
      r.h = 0.0;
      if (lead > 0.0) {
        r.kind = EndpointKind::IncompleteBlowup;
        r.note = "f -> inf at finite t";
      } else {
        r.kind = EndpointKind::RoundCollapse;
        r.n = 1;
        r.df_dt = sign;
        r.dh_dt = sign;
        if (!lower) r.note = "h' -> -1 treated as a round collapse";
      }
      break;
    }
    case EndKind::SimpleRoot: {
      const double z = end.s;
      r.df_dt = p.a == Branch::Zero ? df_dt_at_root_a0(p.C, p.lambda, z) : df_dt_at_root(p.a, p.C, p.lambda, z);
      r.dh_dt = 0.0;
      r.h = p.a == Branch::Zero ? z : 2.0 * z / std::abs(z * z + value_of(p.a));
      r.n = collapse_order(r.df_dt);
      if (!r.n) {
        r.kind = EndpointKind::ConicalCollapse;
        r.note = "|f'| is not an integer";
      } else if (*r.n == 1) {
        r.kind = EndpointKind::BoltCollapse;
      } else {
        r.kind = EndpointKind::OrbifoldCollapse;
      }
      break;
    }
    case EndKind::MultipleRoot:
      r.kind = EndpointKind::InfiniteEnd;
      r.note = "multiple root of the radicand";
      break;
    case EndKind::Pole:
      r.kind = EndpointKind::InfiniteEnd;
      r.note = "s = 1 pole";
      break;
  }
  return r;
}

}  // namespace

std::vector<EndpointReport> endpoint_analysis(const ModelParams& params, const SInterval& interval) {
  const auto iv = match_interval(params, interval);
  if (!iv) throw Error(ErrorKind::InvalidInterval, "not a maximal positivity interval");
  EndpointReport lo = analyse_end(params, iv->lo, true);
  EndpointReport hi = analyse_end(params, iv->hi, false);
  const ArcLength arc(params, *iv);
  lo.t = arc.t_lo();
  hi.t = arc.t_hi();
  return {lo, hi};
}

}  // namespace ecyl
