#include "einstein_cyl/domain.hpp"

#include <algorithm>
#include <cmath>

#include "einstein_cyl/error.hpp"

namespace ecyl {

std::string_view to_string(EndKind kind) {
  switch (kind) {
    case EndKind::Zero: return "zero";
    case EndKind::SimpleRoot: return "simple_root";
    case EndKind::MultipleRoot: return "multiple_root";
    case EndKind::Pole: return "pole";
    case EndKind::Infinity: return "infinity";
  }
  return "unknown";
}

namespace {

double probe_point(double lo, double hi) {
  if (std::isinf(hi)) return lo == 0.0 ? 1.0 : 2.0 * lo;
  if (lo == 0.0) return 0.5 * hi;
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<PositivityInterval> positivity_intervals(const ModelParams& params, const RootOptions& options) {
  const Polynomial R = radicand(params);
  std::vector<IntervalEnd> breaks;
  breaks.push_back({0.0, EndKind::Zero, 0, std::nullopt});
  const bool pole = params.a == Branch::Minus;
  bool pole_added = false;
  for (const auto& r : positive_roots(R, options).roots) {
    const double z = std::sqrt(r.x);
    if (pole && std::abs(r.x - 1.0) <= 1e-12) continue;
    if (pole && !pole_added && z > 1.0) {
      breaks.push_back({1.0, EndKind::Pole, 0, std::nullopt});
      pole_added = true;
    }
    const EndKind kind = r.multiplicity == 1 ? EndKind::SimpleRoot : EndKind::MultipleRoot;
    breaks.push_back({z, kind, r.multiplicity, factor_root(R, z, r.multiplicity)});
  }
  if (pole && !pole_added) breaks.push_back({1.0, EndKind::Pole, 0, std::nullopt});
  breaks.push_back({kInf, EndKind::Infinity, 0, std::nullopt});

  std::vector<PositivityInterval> out;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double lo = breaks[k].s;
    const double hi = breaks[k + 1].s;
    const double probe = probe_point(lo, hi);
    if (!(R(probe * probe) > 0.0)) continue;
    out.push_back({{lo, hi}, breaks[k], breaks[k + 1]});
  }
  return out;
}

std::optional<PositivityInterval> interval_containing(const ModelParams& params, double s0, double s1) {
  // Ends given to working precision (e.g. sqrt(1/3) for a root) still match.
  const auto slack = [](double end) { return std::isinf(end) ? 0.0 : 1e-12 * std::max(1.0, end); };
  for (const auto& iv : positivity_intervals(params)) {
    if (s0 >= iv.s.lo - slack(iv.s.lo) && s1 <= iv.s.hi + slack(iv.s.hi) && s0 < iv.s.hi && s1 > iv.s.lo) return iv;
  }
  return std::nullopt;
}

std::optional<PositivityInterval> match_interval(const ModelParams& params, const SInterval& s, double rel_tol) {
  const auto close = [rel_tol](double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= rel_tol * std::max(1.0, std::abs(x));
  };
  for (const auto& iv : positivity_intervals(params)) {
    if (close(iv.s.lo, s.lo) && close(iv.s.hi, s.hi)) return iv;
  }
  return std::nullopt;
}

bool t_finite(const ModelParams& params, const IntervalEnd& end) {
  switch (end.kind) {
    case EndKind::Zero: return true;
    case EndKind::SimpleRoot: return true;
    case EndKind::MultipleRoot: return false;
    case EndKind::Pole: return false;
    case EndKind::Infinity: return params.a != Branch::Zero;
  }
  return false;
}

}  // namespace ecyl
