#include "einstein_cyl/reparam.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "einstein_cyl/error.hpp"
#include "einstein_cyl/quadrature.hpp"

namespace ecyl {

namespace {

double numerator_scale(const ModelParams& p) { return p.a == Branch::Zero ? 1.0 : 8.0 * std::sqrt(3.0); }

double denom(const ModelParams& p, double x) { return p.a == Branch::Zero ? 1.0 : std::abs(x + value_of(p.a)); }

double split_point(const SInterval& s) {
  if (std::isinf(s.hi)) return s.lo == 0.0 ? 1.0 : 2.0 * s.lo;
  if (s.lo == 0.0) return 0.5 * s.hi;
  return 0.5 * (s.lo + s.hi);
}

}  // namespace

double dt_ds(const ModelParams& params, double s) { return metric_components(params, s).dt_ds; }

double dr_dt(const ModelParams& params, double s) {
  const auto m = metric_components(params, s);
  return m.f / (m.h * m.h);
}

ArcLength::ArcLength(const ModelParams& params, const PositivityInterval& interval, double tol)
    : params_(params),
      interval_(interval),
      radicand_(radicand(params)),
      reversed_(params.a == Branch::Zero ? Polynomial{} : radicand_.reversed(4)),
      tol_(tol),
      split_(split_point(interval.s)),
      t_lo_(-kInf),
      t_hi_(kInf) {
  if (!(tol > 0.0)) throw Error(ErrorKind::Usage, "quadrature tolerance must be positive");
  if (t_finite(params_, interval_.lo)) {
    t_lo_ = 0.0;
    if (t_finite(params_, interval_.hi)) t_hi_ = between(interval_.s.lo, interval_.s.hi).value;
  } else if (t_finite(params_, interval_.hi)) {
    t_hi_ = 0.0;
  }
}

double ArcLength::piece(const IntervalEnd& end, double s0, double s1, double& err) const {
  if (!(s1 > s0)) return 0.0;
  const ModelParams& p = params_;
  const double c0 = numerator_scale(p);
  QuadOptions opt;
  opt.abs_tol = tol_;
  QuadResult r;
  switch (end.kind) {
    case EndKind::Zero: {
      r = integrate([&](double s) { return dt_ds(p, s); }, s0, s1, opt);
      break;
    }
    case EndKind::SimpleRoot:
    case EndKind::MultipleRoot: {
      const RootFactor& fac = *end.factor;
      const double z = fac.z;
      const double sigma = end.s <= s0 ? 1.0 : -1.0;
      // dt/ds at s = z + d with x - z^2 = d (2z + d) kept exact.
      const auto near = [&, z](double d) {
        const double s = z + d;
        const double x = s * s;
        const double dx = std::abs(d * (2.0 * z + d));
        const double root = fac.multiplicity == 1 ? std::sqrt(dx) : std::pow(dx, 0.5 * fac.multiplicity);
        return c0 * x / (denom(p, x) * root * std::sqrt(std::abs(fac.quotient(x))));
      };
      if (end.kind == EndKind::SimpleRoot) {
        const double u0 = std::sqrt(std::abs(s0 - z));
        const double u1 = std::sqrt(std::abs(s1 - z));
        r = integrate([&](double u) { return near(sigma * u * u) * 2.0 * u; }, std::min(u0, u1), std::max(u0, u1), opt);
      } else {
        const double y0 = -std::log(std::abs(s0 - z));
        const double y1 = -std::log(std::abs(s1 - z));
        r = integrate([&](double y) {
              const double d = std::exp(-y);
              return near(sigma * d) * d;
            },
            std::min(y0, y1), std::max(y0, y1), opt);
      }
      break;
    }
    case EndKind::Pole: {
      // s = 1 + d, s^2 - 1 = d (2 + d).
      const double sigma = end.s <= s0 ? 1.0 : -1.0;
      const auto near = [&](double d) {
        const double s = 1.0 + d;
        const double x = s * s;
        return c0 * x / (std::abs(d * (2.0 + d)) * std::sqrt(radicand_(x)));
      };
      const double y0 = -std::log(std::abs(s0 - 1.0));
      const double y1 = -std::log(std::abs(s1 - 1.0));
      r = integrate([&](double y) {
            const double d = std::exp(-y);
            return near(sigma * d) * d;
          },
          std::min(y0, y1), std::max(y0, y1), opt);
      break;
    }
    case EndKind::Infinity: {
      if (p.a == Branch::Zero) {
        r = integrate([&](double w) {
              const double s = std::exp(w);
              return dt_ds(p, s) * s;
            },
            std::log(s0), std::log(s1), opt);
      } else {
        // v = 1/s, y = v^2: |dt/dv| = 8 sqrt(3) y / (|1 + a y| sqrt(x^4 G(1/y))).
        const double a = value_of(p.a);
        r = integrate([&](double v) {
              const double y = v * v;
              return c0 * y / (std::abs(1.0 + a * y) * std::sqrt(reversed_(y)));
            },
            std::isinf(s1) ? 0.0 : 1.0 / s1, 1.0 / s0, opt);
      }
      break;
    }
  }
  err += r.error;
  return r.value;
}

TValue ArcLength::between(double s0, double s1) const {
  const auto& iv = interval_;
  if (!(s0 <= s1) || s0 < iv.s.lo || s1 > iv.s.hi) {
    throw Error(ErrorKind::InvalidInterval, "[s0, s1] is not inside the positivity interval");
  }
  if ((s0 == iv.s.lo && !t_finite(params_, iv.lo)) || (s1 == iv.s.hi && !t_finite(params_, iv.hi))) {
    return {kInf, 0.0, true};
  }
  double err = 0.0;
  double total = 0.0;
  if (s0 < split_) total += piece(iv.lo, s0, std::min(s1, split_), err);
  if (s1 > split_) total += piece(iv.hi, std::max(s0, split_), s1, err);
  return {total, err, false};
}

double ArcLength::t_of(double s) const {
  const auto& iv = interval_;
  if (std::isfinite(t_lo_)) return between(iv.s.lo, s).value;
  if (std::isfinite(t_hi_)) return -between(s, iv.s.hi).value;
  return s >= split_ ? between(split_, s).value : -between(s, split_).value;
}

double ArcLength::s_of(double t) const {
  if (!(t > t_lo_ && t < t_hi_)) throw Error(ErrorKind::OutOfRange, "t outside the interval's t-range");
  const auto& iv = interval_;
  const auto g = [&](double s) { return t_of(s) - t; };
  double bl = split_;
  double bh = split_;
  double gl = g(bl);
  double gh = gl;
  for (int it = 0; gl > 0.0 && it < 2000; ++it) {
    if (t_finite(params_, iv.lo)) {
      bl = iv.s.lo;
    } else {
      bl = iv.s.lo + 0.5 * (bl - iv.s.lo);
    }
    gl = g(bl);
  }
  for (int it = 0; gh < 0.0 && it < 2000; ++it) {
    if (std::isinf(iv.s.hi)) {
      bh *= 2.0;
    } else if (t_finite(params_, iv.hi)) {
      bh = iv.s.hi;
    } else {
      bh = iv.s.hi - 0.5 * (iv.s.hi - bh);
    }
    gh = g(bh);
  }
  if (gl == 0.0) return bl;
  if (gh == 0.0) return bh;
  if (gl > 0.0 || gh < 0.0) throw Error(ErrorKind::OutOfRange, "could not bracket s for the requested t");
  std::uintmax_t max_iter = 200;
  const auto res = boost::math::tools::toms748_solve(g, bl, bh, gl, gh,
                                                     boost::math::tools::eps_tolerance<double>(52), max_iter);
  return 0.5 * (res.first + res.second);
}

TValue t_of_s(const ModelParams& params, double s0, double s1, double tol) {
  if (!(s0 <= s1)) throw Error(ErrorKind::InvalidInterval, "t_of_s requires s0 <= s1");
  const auto iv = interval_containing(params, s0, s1);
  if (!iv) throw Error(ErrorKind::InvalidInterval, "interval leaves the region where f^2 > 0");
  return ArcLength(params, *iv, tol).between(std::max(s0, iv->s.lo), std::min(s1, iv->s.hi));
}

ProfileSample state_on(const ModelParams& params, const PositivityInterval& interval, double s) {
  const IntervalEnd& end = s < split_point(interval.s) ? interval.lo : interval.hi;
  if (end.factor) return state_at(params, s, *end.factor);
  return state_at(params, s);
}

ProfileGrid sample_profile(const ModelParams& params, const SInterval& interval, int count,
                           const SampleOptions& options) {
  if (count < 3) throw Error(ErrorKind::Usage, "sample_profile needs count >= 3");
  const auto iv = match_interval(params, interval);
  if (!iv) throw Error(ErrorKind::InvalidInterval, "not a maximal positivity interval");
  const ArcLength arc(params, *iv, options.tol);
  const double tl = arc.t_lo();
  const double th = arc.t_hi();
  double ta = 0.0;
  double tb = 0.0;
  if (std::isfinite(tl) && std::isfinite(th)) {
    const double m = std::min(options.margin, 0.1 * (th - tl));
    ta = tl + m;
    tb = th - m;
  } else if (std::isfinite(tl)) {
    ta = tl + options.margin;
    tb = tl + options.infinite_span;
  } else if (std::isfinite(th)) {
    ta = th - options.infinite_span;
    tb = th - options.margin;
  } else {
    ta = -0.5 * options.infinite_span;
    tb = 0.5 * options.infinite_span;
  }

  ProfileGrid grid;
  grid.params = params;
  grid.s_interval = iv->s;
  grid.samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double t = ta + (tb - ta) * static_cast<double>(i) / (count - 1);
    const double s = arc.s_of(t);
    ProfileSample sample = state_on(params, *iv, s);
    sample.t = t;
    grid.samples.push_back(sample);
  }
  grid.endpoints = endpoint_analysis(params, iv->s);
  return grid;
}

ProfileFn local_chart(const ModelParams& params, double s_center, double t_center) {
  const double phi_c = dt_ds(params, s_center);
  return [params, s_center, t_center, phi_c](double t) {
    using Gauss = boost::math::quadrature::gauss<double, 30>;
    const double tau = t - t_center;
    const auto arc = [&](double s) {
      if (s == s_center) return 0.0;
      const double lo = std::min(s, s_center);
      const double hi = std::max(s, s_center);
      const double v = Gauss::integrate([&](double u) { return dt_ds(params, u); }, lo, hi);
      return s > s_center ? v : -v;
    };
    double s = s_center + tau / phi_c;
    for (int it = 0; it < 50; ++it) {
      const double step = (arc(s) - tau) / dt_ds(params, s);
      s -= step;
      if (std::abs(step) <= 1e-16 * s) break;
    }
    ProfileSample out = state_at(params, s);
    out.t = t;
    return out;
  };
}

ProfileFn closed_form_profile(ClosedForm form) {
  return [form](double t) { return closed_form_sample(form, t); };
}

}  // namespace ecyl
