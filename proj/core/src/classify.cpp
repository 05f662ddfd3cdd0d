#include "einstein_cyl/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "einstein_cyl/domain.hpp"
#include "einstein_cyl/error.hpp"
#include "einstein_cyl/families.hpp"

namespace ecyl {

namespace {

bool close(double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); }

bool same(const ModelParams& p, const ModelParams& q) {
  return p.a == q.a && close(p.C, q.C) && close(p.lambda, q.lambda);
}

double invert(double s) { return s == 0.0 ? kInf : (std::isinf(s) ? 0.0 : 1.0 / s); }

SInterval to_input_chart(const NormalizedParams& norm, const SInterval& s) {
  if (norm.flipped) return {invert(s.hi), invert(s.lo)};
  return {s.lo / norm.scale, s.hi / norm.scale};
}

bool acceptable(const EndpointReport& e) {
  switch (e.kind) {
    case EndpointKind::RoundCollapse:
    case EndpointKind::BoltCollapse:
    case EndpointKind::OrbifoldCollapse:
    case EndpointKind::InfiniteEnd: return true;
    default: return false;
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::optional<std::string> match_label(const ModelParams& p) {
  for (SolutionName name : {SolutionName::Flat, SolutionName::FubiniStudy, SolutionName::ComplexHyperbolic,
                            SolutionName::Sphere4, SolutionName::Page, SolutionName::RealHyperbolic}) {
    const auto sol = named_solution(name);
    if (same(p, sol.params)) return sol.label;
  }
  if (p.a == Branch::Zero && p.lambda == 0.0 && p.C < 0.0) {
    return named_solution(SolutionRequest{SolutionName::EguchiHanson, std::pow(-p.C, 0.25)}).label;
  }
  if (p.a == Branch::Zero && p.lambda == -6.0 && p.C < 0.0) {
    // D(n) is increasing in n.
    for (int n = 3; n <= 100000; ++n) {
      const double D = orbifold_D(n);
      if (close(-p.C, D)) {
        SolutionRequest req{SolutionName::OrbifoldA0};
        req.n = n;
        return named_solution(req).label;
      }
      if (D > -p.C * 2.0) break;
    }
  }
  return std::nullopt;
}

std::vector<ClassificationRecord> classify_case(const ModelParams& input) {
  const NormalizedParams norm = normalize(input);
  const ModelParams& p = norm.params;
  ClassificationRecord base;
  base.case_id = case_id_for(p);
  base.params = p;
  base.input = input;
  base.label = match_label(p);
  if (norm.flipped) base.notes.push_back("C < 0: classified after s -> 1/s, which replaces C by -C");
  if (norm.scale != 1.0) {
    base.notes.push_back("metric rescaled by " + fmt(norm.scale * norm.scale) + " so that |lambda| = 6");
  }
  if (base.case_id == "3.7") base.notes.push_back("interval taken as s in (z, inf) with t in (0, inf)");

  std::vector<ClassificationRecord> out;
  const auto intervals = positivity_intervals(p);
  if (intervals.empty()) {
    ClassificationRecord r = base;
    r.notes.push_back("f^2 <= 0 for every s > 0");
    out.push_back(std::move(r));
    return out;
  }
  for (const auto& iv : intervals) {
    ClassificationRecord r = base;
    r.s_interval = iv.s;
    r.input_interval = to_input_chart(norm, iv.s);
    r.endpoints = endpoint_analysis(p, iv.s);
    r.complete = std::all_of(r.endpoints.begin(), r.endpoints.end(), acceptable);
    int max_order = 1;
    for (const auto& e : r.endpoints)
      if (e.n) max_order = std::max(max_order, *e.n);
    r.smooth = r.complete && max_order == 1;
    if (r.complete && !r.smooth) r.orbifold_n = max_order;
    if (r.label && r.label->find("Eguchi") != std::string::npos) {
      r.notes.push_back("orbifold order 2 on I x S^3; the Z_2 quotient is the smooth TS^2");
    }
    const bool two_bolts = iv.lo.kind == EndKind::SimpleRoot && iv.hi.kind == EndKind::SimpleRoot;
    if (r.case_id == "6.6" && two_bolts && r.smooth) {
      r.notes.push_back("smooth (z2, z3) interval disagrees with the stated not-smooth verdict");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ClassificationRecord> sweep(const GridSpec& grid, unsigned threads) {
  std::vector<ModelParams> points;
  for (int a : grid.a)
    for (double C : grid.C)
      for (double lambda : grid.lambda) points.push_back({branch_from_int(a), C, lambda});
  points.insert(points.end(), grid.points.begin(), grid.points.end());

  unsigned workers = threads;
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("EINSTEIN_CYL_THREADS")) {
      char* end = nullptr;
      const unsigned long cap = std::strtoul(env, &end, 10);
      if (end != env && cap > 0) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
  }
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, points.size()));

  std::vector<std::vector<ClassificationRecord>> results(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        results[i] = classify_case(points[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ClassificationRecord> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace ecyl
