#include "einstein_cyl/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "einstein_cyl/domain.hpp"
#include "einstein_cyl/error.hpp"
#include "einstein_cyl/jet.hpp"
#include "einstein_cyl/smoothness.hpp"

namespace ecyl {

double eval_h(Branch a, double r) {
  switch (a) {
    case Branch::Zero: return std::exp(r);
    case Branch::Plus: return 1.0 / std::cosh(r);
    case Branch::Minus:
      if (!(r > 0.0)) throw Error(ErrorKind::Domain, "csch r requires r > 0");
      return 1.0 / std::sinh(r);
  }
  return kNaN;
}

double eval_f_a0(double r, double C, double lambda) {
  const double t4 = -lambda / 6.0 * std::exp(4.0 * r);
  const double t2 = std::exp(2.0 * r);
  const double t0 = C * std::exp(-2.0 * r);
  const double radicand = t4 + t2 + t0;
  // The boundary of the domain itself evaluates to f = 0.
  const double scale = std::abs(t4) + t2 + std::abs(t0);
  if (std::abs(radicand) <= 8 * std::numeric_limits<double>::epsilon() * scale) return 0.0;
  if (!(radicand > 0.0)) throw Error(ErrorKind::OutsideDomain, "f^2 < 0 at r = " + std::to_string(r));
  return std::sqrt(radicand);
}

namespace {

double tie_scale(const ModelParams& p) {
  return std::max({24.0, 3.0 * std::abs(p.C), 8.0 * std::abs(p.lambda)});
}

double g0_raw(const ModelParams& p) { return 24.0 - 3.0 * p.C - 8.0 * value_of(p.a) * p.lambda; }
double g4_raw(const ModelParams& p) { return 24.0 + 3.0 * p.C - 8.0 * value_of(p.a) * p.lambda; }

double snap(double v, double scale) { return std::abs(v) <= kTieBand * scale ? 0.0 : v; }

GPoly make_g(double a, double g0, double g4) { return GPoly{{g0, 2.0 * a * g0, 48.0, 2.0 * a * g4, g4}}; }

void require_pm(const ModelParams& p, const char* what) {
  if (p.a == Branch::Zero) throw Error(ErrorKind::Usage, std::string(what) + " requires a = +-1");
}

Jet eval_jet(const Polynomial& p, Jet x) {
  Jet acc = Jet::constant(0.0);
  const auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Jet power(Jet x, int m) {
  Jet acc = Jet::constant(1.0);
  for (int i = 0; i < m; ++i) acc = acc * x;
  return acc;
}

// F = f^2, rho = (ds/dt)/f and h, all as jets in s, then the chain rule in t.
ProfileSample assemble(const ModelParams& params, double s, Jet radicand_jet) {
  const Jet S = Jet::variable(s);
  const Jet X = S * S;
  Jet F, rho, h;
  if (params.a == Branch::Zero) {
    F = radicand_jet / X;
    rho = reciprocal(S);
    h = S;
  } else {
    const Jet q = X + value_of(params.a);
    const double sigma = q.v > 0.0 ? 1.0 : -1.0;
    F = radicand_jet / (12.0 * X * q * q);
    rho = q * q / (4.0 * S);
    h = sigma * 2.0 * S / q;
  }
  if (!(F.v > 0.0)) throw Error(ErrorKind::OutsideDomain, "f^2 <= 0 at s = " + std::to_string(s));
  const Jet W = F * rho * rho;  // (ds/dt)^2
  const double w = std::sqrt(W.v);
  const double R = 0.5 * F.d * rho.v;  // df/dt
  const double R_s = 0.5 * (F.dd * rho.v + F.d * rho.d);

  ProfileSample out;
  out.t = kNaN;
  out.s = s;
  out.f = std::sqrt(F.v);
  out.h = h.v;
  out.df_dt = R;
  out.d2f_dt2 = R_s * w;
  out.dh_dt = h.d * w;
  out.d2h_dt2 = h.dd * W.v + 0.5 * h.d * W.d;
  return out;
}

void check_s(const ModelParams& params, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorKind::OutsideDomain, "s must be positive and finite");
  if (params.a == Branch::Minus && s == 1.0) throw Error(ErrorKind::Pole, "s = 1 is a pole for a = -1");
}

}  // namespace

GPoly g_poly(const ModelParams& params) {
  require_pm(params, "g_poly");
  return make_g(value_of(params.a), g0_raw(params), g4_raw(params));
}

GPoly model_poly(const ModelParams& params) {
  require_pm(params, "model_poly");
  const double scale = tie_scale(params);
  return make_g(value_of(params.a), snap(g0_raw(params), scale), snap(g4_raw(params), scale));
}

Polynomial a0_radicand(const ModelParams& params) {
  if (params.a != Branch::Zero) throw Error(ErrorKind::Usage, "a0_radicand requires a = 0");
  const double C = snap(params.C, std::max(1.0, std::abs(params.lambda)));
  return Polynomial({C, 0.0, 1.0, -params.lambda / 6.0});
}

Polynomial radicand(const ModelParams& params) {
  return params.a == Branch::Zero ? a0_radicand(params) : model_poly(params).polynomial();
}

bool is_tie(const ModelParams& params, int which) {
  require_pm(params, "is_tie");
  const double v = which == 0 ? g0_raw(params) : g4_raw(params);
  return std::abs(v) <= kTieBand * tie_scale(params);
}

MetricComponents metric_components(const ModelParams& params, double s) {
  check_s(params, s);
  const double x = s * s;
  if (params.a == Branch::Zero) {
    const double P = a0_radicand(params)(x);
    if (!(P > 0.0)) throw Error(ErrorKind::OutsideDomain, "s^2 f^2 <= 0 at s = " + std::to_string(s));
    const double f = std::sqrt(P) / s;
    return {f, s, s / f};
  }
  const double G = model_poly(params)(x);
  if (!(G > 0.0)) throw Error(ErrorKind::OutsideDomain, "G(s^2) <= 0 at s = " + std::to_string(s));
  const double q = std::abs(x + value_of(params.a));
  return {std::sqrt(G / (12.0 * x)) / q, 2.0 * s / q, 8.0 * std::sqrt(3.0) * x / (q * std::sqrt(G))};
}

ProfileSample state_at(const ModelParams& params, double s) {
  check_s(params, s);
  const Jet S = Jet::variable(s);
  return assemble(params, s, eval_jet(radicand(params), S * S));
}

RootFactor factor_root(const Polynomial& radicand_poly, double z, int multiplicity) {
  RootFactor out{z, multiplicity, radicand_poly};
  for (int i = 0; i < multiplicity; ++i) out.quotient = out.quotient.deflate(z * z);
  return out;
}

ProfileSample state_at(const ModelParams& params, double s, const RootFactor& near) {
  check_s(params, s);
  const Jet S = Jet::variable(s);
  // x - z^2 = (s - z)(s + z), exact for s close to z.
  const Jet dx = (S - near.z) * (S + near.z);
  return assemble(params, s, power(dx, near.multiplicity) * eval_jet(near.quotient, S * S));
}

NormalizedParams normalize(const ModelParams& params) {
  NormalizedParams out{params, false, 1.0};
  if (params.a == Branch::Zero) {
    if (std::abs(params.lambda) <= kTieBand) {
      out.params.lambda = 0.0;
      return out;
    }
    const double k2 = std::abs(params.lambda) / 6.0;
    out.scale = std::sqrt(k2);
    out.params.lambda = params.lambda > 0.0 ? 6.0 : -6.0;
    out.params.C = params.C * k2 * k2;
    return out;
  }
  if (params.C < 0.0) {
    out.params.C = -params.C;
    out.flipped = true;
  }
  return out;
}

std::string case_id_for(const ModelParams& p) {
  if (p.a == Branch::Zero) {
    const double C = snap(p.C, std::max(1.0, std::abs(p.lambda)));
    const int c = C > 0.0 ? 1 : (C < 0.0 ? -1 : 0);
    const int l = p.lambda > 0.0 ? 1 : (p.lambda < 0.0 ? -1 : 0);
    static constexpr std::array<std::array<const char*, 3>, 3> table{{
        // C < 0, C = 0, C > 0
        {"3.7", "3.3", "3.6"},  // lambda = -6
        {"3.5", "3.1", "3.4"},  // lambda = 0
        {"3.9", "3.2", "3.8"},  // lambda = 6
    }};
    return table[l + 1][c + 1];
  }
  const GPoly g = model_poly(p);
  if (p.a == Branch::Plus) {
    if (g.g4() > 0.0) return "5.1";
    if (g.g4() == 0.0) return "5.2";
    return "5.3";
  }
  const bool lambda_positive = p.lambda > kTieBand * tie_scale(p);
  if (lambda_positive) {
    if (g.g0() == 0.0) return "6.7";
    return g.g0() > 0.0 ? "6.8" : "6.6";
  }
  // a = -1: g4 = 24 + 3C + 8 lambda, g0 = 24 - 3C + 8 lambda.
  if (g.g0() == 0.0) return "6.4";
  if (g.g4() == 0.0) return "6.2";
  if (g.g4() < 0.0) return "6.1";
  if (g.g0() > 0.0) return "6.5";
  return "6.3";
}

std::string_view to_string(ClosedForm form) {
  switch (form) {
    case ClosedForm::Flat: return "flat";
    case ClosedForm::FubiniStudy: return "fubini_study";
    case ClosedForm::ComplexHyperbolic: return "complex_hyperbolic";
    case ClosedForm::Sphere4: return "sphere4";
    case ClosedForm::RealHyperbolic: return "real_hyperbolic";
  }
  return "unknown";
}

ProfileSample closed_form_sample(ClosedForm form, double t) {
  ProfileSample p;
  p.t = t;
  switch (form) {
    case ClosedForm::Flat:
      p = {t, t, t, t, 1.0, 1.0, 0.0, 0.0};
      break;
    case ClosedForm::FubiniStudy:
      p = {t, std::sin(t), 0.5 * std::sin(2 * t), std::sin(t), std::cos(2 * t), std::cos(t),
           -2.0 * std::sin(2 * t), -std::sin(t)};
      break;
    case ClosedForm::ComplexHyperbolic:
      p = {t, std::sinh(t), 0.5 * std::sinh(2 * t), std::sinh(t), std::cosh(2 * t), std::cosh(t),
           2.0 * std::sinh(2 * t), std::sinh(t)};
      break;
    case ClosedForm::Sphere4:
      p = {t, std::tan(0.5 * t), std::sin(t), std::sin(t), std::cos(t), std::cos(t), -std::sin(t), -std::sin(t)};
      break;
    case ClosedForm::RealHyperbolic:
      p = {t, std::tanh(0.5 * t), std::sinh(t), std::sinh(t), std::cosh(t), std::cosh(t), std::sinh(t),
           std::sinh(t)};
      break;
  }
  return p;
}

TRange closed_form_t_range(ClosedForm form) {
  switch (form) {
    case ClosedForm::FubiniStudy: return {0.0, std::numbers::pi / 2};
    case ClosedForm::Sphere4: return {0.0, std::numbers::pi};
    default: return {0.0, kInf};
  }
}

PageRoots page_roots() {
  const double y = 2.0 * (std::cbrt(1.0 + std::numbers::sqrt2) + std::cbrt(1.0 - std::numbers::sqrt2));
  const double x2 = 0.5 * std::sqrt(y) + 0.5 * std::sqrt(-y + 8.0 / std::sqrt(y));
  PageRoots out;
  out.x2 = x2;
  out.z2 = std::sqrt(x2);
  out.z1 = 1.0 / out.z2;
  const double x1 = out.z1 * out.z1;
  out.lambda = (3.0 * x1 * x1 + 4.0 * x1 + 1.0) / (2.0 * x1);
  return out;
}

double orbifold_D(int n) {
  if (n < 3) throw Error(ErrorKind::Invalid, "orbifold family requires n >= 3, got " + std::to_string(n));
  const double m = n - 2;
  return m * m / 9.0 + m * m * m / 27.0;
}

EquationSides nonexistence_39_sides(int n) {
  const double l = 4.0 - n;
  const double r = 4.0 + n;
  return {6.0 * l * l - l * l * l, 6.0 * r * r - r * r * r};
}

bool nonexistence_39_check(int n) {
  const auto sides = nonexistence_39_sides(n);
  return sides.lhs == sides.rhs;
}

namespace {

struct NameEntry {
  SolutionName name;
  std::string_view text;
};

constexpr std::array<NameEntry, 11> kNames{{
    {SolutionName::Flat, "flat"},
    {SolutionName::FubiniStudy, "fubini_study"},
    {SolutionName::ComplexHyperbolic, "complex_hyperbolic"},
    {SolutionName::EguchiHanson, "eguchi_hanson"},
    {SolutionName::Sphere4, "sphere4"},
    {SolutionName::Page, "page"},
    {SolutionName::RealHyperbolic, "real_hyperbolic"},
    {SolutionName::OrbifoldA0, "orbifold_a0"},
    {SolutionName::FamilyA1Z, "family_a1_z"},
    {SolutionName::FamilyAm1Z, "family_am1_z"},
    {SolutionName::FamilyC24, "family_c24"},
}};

std::string case_of(const ModelParams& p) { return case_id_for(normalize(p).params); }

SolutionFamily make(ModelParams params, SInterval s, std::optional<ClosedForm> form,
                    std::optional<std::string> label) {
  SolutionFamily out;
  out.params = params;
  out.s_interval = s;
  out.closed_form = form;
  out.label = std::move(label);
  out.case_id = case_of(params);
  return out;
}

// Interval of f^2 > 0 that has z as its lower (n > 0) or upper (n < 0) end.
SInterval interval_at_root(const ModelParams& p, double z, int n) {
  for (const auto& iv : positivity_intervals(p)) {
    const double end = n > 0 ? iv.s.lo : iv.s.hi;
    if (std::isfinite(end) && std::abs(end - z) <= 1e-9 * std::max(1.0, z)) return iv.s;
  }
  throw Error(ErrorKind::OutOfRange, "no positivity interval ends at z = " + std::to_string(z));
}

}  // namespace

std::string_view to_string(SolutionName name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.text;
  return "unknown";
}

std::optional<SolutionName> parse_solution_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.text == name) return e.name;
  return std::nullopt;
}

SolutionFamily named_solution(SolutionName name) { return named_solution(SolutionRequest{name}); }

SolutionFamily named_solution(const SolutionRequest& req) {
  switch (req.name) {
    case SolutionName::Flat:
      return make({Branch::Zero, 0.0, 0.0}, {0.0, kInf}, ClosedForm::Flat, "R^4 (flat)");
    case SolutionName::FubiniStudy:
      return make({Branch::Zero, 0.0, 6.0}, {0.0, 1.0}, ClosedForm::FubiniStudy, "CP^2 (Fubini-Study)");
    case SolutionName::ComplexHyperbolic:
      return make({Branch::Zero, 0.0, -6.0}, {0.0, kInf}, ClosedForm::ComplexHyperbolic,
                  "complex hyperbolic space");
    case SolutionName::EguchiHanson: {
      if (!(req.D > 0.0)) throw Error(ErrorKind::Invalid, "Eguchi-Hanson requires D > 0");
      const double D4 = req.D * req.D * req.D * req.D;
      auto out = make({Branch::Zero, -D4, 0.0}, {req.D, kInf}, std::nullopt, "TS^2 (Eguchi-Hanson)");
      out.D = req.D;
      out.notes = "D = (-C)^(1/4); f'(0) = 2, so the S^3 quotient by Z_2 is smooth";
      return out;
    }
    case SolutionName::Sphere4:
      return make({Branch::Plus, 0.0, 3.0}, {0.0, kInf}, ClosedForm::Sphere4, "S^4 (round)");
    case SolutionName::Page: {
      const auto pr = page_roots();
      return make({Branch::Plus, 0.0, pr.lambda}, {pr.z1, pr.z2}, std::nullopt, "CP^2 # -CP^2 (Page)");
    }
    case SolutionName::RealHyperbolic:
      return make({Branch::Minus, 0.0, -3.0}, {0.0, 1.0}, ClosedForm::RealHyperbolic, "H^4 (real hyperbolic)");
    case SolutionName::OrbifoldA0: {
      const double D = orbifold_D(req.n);
      auto out = make({Branch::Zero, -D, -6.0}, {std::sqrt((req.n - 2) / 3.0), kInf}, std::nullopt,
                      "I x S^3/Z_" + std::to_string(req.n) + " orbifold");
      out.D = D;
      out.notes = "D = -C; interval taken as s in (z, inf) with t in (0, inf)";
      return out;
    }
    case SolutionName::FamilyA1Z:
    case SolutionName::FamilyAm1Z: {
      const Branch a = req.name == SolutionName::FamilyA1Z ? Branch::Plus : Branch::Minus;
      if (req.n == 0) throw Error(ErrorKind::OutOfRange, "collapse order n must be nonzero");
      if (a == Branch::Minus && !((req.z < 1.0 && req.n > 0) || (req.z > 1.0 && req.n < 0))) {
        throw Error(ErrorKind::OutOfRange, "a = -1 families need z < 1 with n > 0 or z > 1 with n < 0");
      }
      const auto cl = c_lambda_from_root(a, req.z, req.n);
      const ModelParams p{a, cl.C, cl.lambda};
      auto out = make(p, interval_at_root(p, req.z, req.n), std::nullopt, std::nullopt);
      out.notes = "collapse order " + std::to_string(req.n) + " at s = z";
      return out;
    }
    case SolutionName::FamilyC24: {
      if (req.lambda > 0.0) throw Error(ErrorKind::OutOfRange, "C = (24+8 lambda)/3 family requires lambda <= 0");
      const ModelParams p{Branch::Minus, (24.0 + 8.0 * req.lambda) / 3.0, req.lambda};
      auto out = make(p, {0.0, 1.0}, std::nullopt, std::nullopt);
      if (req.lambda == -3.0) {
        out.closed_form = ClosedForm::RealHyperbolic;
        out.label = "H^4 (real hyperbolic)";
      }
      return out;
    }
  }
  throw Error(ErrorKind::Usage, "unknown solution name");
}

}  // namespace ecyl
