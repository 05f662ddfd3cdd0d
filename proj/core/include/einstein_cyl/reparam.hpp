#pragma once

#include <functional>
#include <vector>

#include "einstein_cyl/domain.hpp"
#include "einstein_cyl/families.hpp"
#include "einstein_cyl/smoothness.hpp"
#include "einstein_cyl/types.hpp"

namespace ecyl {

// dt/ds: 8 sqrt(3) s^2 / (|s^2+a| sqrt(G(s^2))) for a = +-1, s / f for a = 0.
double dt_ds(const ModelParams& params, double s);

// dr/dt = f / h^2 along the profile, with r = ln s.
double dr_dt(const ModelParams& params, double s);

struct TValue {
  double value = 0.0;  // +inf when infinite
  double error = 0.0;
  bool infinite = false;
};

// Arc length from s0 to s1 (s0 <= s1) inside one maximal positivity interval;
// s0 and s1 may be the interval ends. Simple-root ends are integrated with
// s = z +- u^2, s -> inf (a = +-1) with v = 1/s.
TValue t_of_s(const ModelParams& params, double s0, double s1, double tol = 1e-10);

// Arc length on one positivity interval with charts adapted to its ends.
class ArcLength {
 public:
  ArcLength(const ModelParams& params, const PositivityInterval& interval, double tol = 1e-12);

  // Integral of dt/ds over [s0, s1] within the closure of the interval.
  TValue between(double s0, double s1) const;

  // Signed t relative to the anchor: the lower end when t-finite there,
  // otherwise the upper end, otherwise the interior point split().
  double t_of(double s) const;
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }
  double split() const { return split_; }

  // s with t_of(s) = t.
  double s_of(double t) const;

  const PositivityInterval& interval() const { return interval_; }
  const ModelParams& params() const { return params_; }

 private:
  double piece(const IntervalEnd& end, double s0, double s1, double& err) const;

  ModelParams params_;
  PositivityInterval interval_;
  Polynomial radicand_;
  Polynomial reversed_;
  double tol_;
  double split_;
  double t_lo_;
  double t_hi_;
};

// Profile state at s, using the root factor of the nearer interval end when there is one.
ProfileSample state_on(const ModelParams& params, const PositivityInterval& interval, double s);

struct ProfileGrid {
  ModelParams params;
  SInterval s_interval;
  std::vector<ProfileSample> samples;
  std::vector<EndpointReport> endpoints;
};

struct SampleOptions {
  double margin = 1e-3;        // distance in t kept from finite ends
  double infinite_span = 5.0;  // t-length sampled toward an infinite end
  double tol = 1e-12;
};

// `count` samples at t-nodes uniform between the (trimmed) ends; near a
// simple root s - z ~ t^2, so the s-nodes cluster like square roots there.
ProfileGrid sample_profile(const ModelParams& params, const SInterval& interval, int count,
                           const SampleOptions& options = {});

using ProfileFn = std::function<ProfileSample(double)>;

// Local t-chart through s_center (placed at t = t_center), built by Newton
// iteration on Gauss-Legendre arc length. Only f, h and first derivatives of
// neighbouring samples are needed by the Koszul oracle, but all are filled.
ProfileFn local_chart(const ModelParams& params, double s_center, double t_center = 0.0);

ProfileFn closed_form_profile(ClosedForm form);

}  // namespace ecyl
