#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "einstein_cyl/classify.hpp"
#include "einstein_cyl/curvature.hpp"
#include "einstein_cyl/reparam.hpp"
#include "support/oracle.hpp"

using namespace ecyl;

namespace {

ModelParams P(int a, double C, double lambda) { return {branch_from_int(a), C, lambda}; }

std::mt19937_64& rng() {
  static std::mt19937_64 g(0x5eed'2024);
  return g;
}

double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }
int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

ModelParams random_pm() { return P(pick(0, 1) ? 1 : -1, uniform(-40, 40), uniform(-12, 12)); }

// Interior s of a positivity interval, away from its ends.
double interior(const SInterval& s) {
  if (std::isinf(s.hi)) return s.lo == 0.0 ? uniform(0.2, 3.0) : s.lo * uniform(1.05, 3.0);
  return s.lo + (s.hi - s.lo) * uniform(0.1, 0.9);
}

}  // namespace

TEST_CASE("Descartes bound dominates the root count") {
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = random_pm();
    const auto rs = positive_roots(g_poly(p));
    CHECK(rs.count_with_multiplicity() <= descartes_bound(g_poly(p)));
    CHECK(rs.descartes_bound == descartes_bound(g_poly(p)));
  }
}

TEST_CASE("reported roots satisfy the residual bound") {
  const RootOptions opt;
  for (int i = 0; i < 1000; ++i) {
    const GPoly g = g_poly(random_pm());
    double gmax = 0.0;
    for (double c : g.coeffs) gmax = std::max(gmax, std::abs(c));
    for (const auto& r : positive_roots(g, opt).roots) {
      CHECK(std::abs(g(r.x)) <= opt.tol_root * (1 + std::pow(r.x, 4)) * gmax);
    }
  }
}

TEST_CASE("root count changes by two across the boundary curve") {
  for (double lambda = 4.25; lambda <= 12.0; lambda += 0.25) {
    const double C0 = boundary_C0(Branch::Plus, lambda);
    const double d = 1e-3 * std::max(1.0, C0);
    CHECK(positive_roots(g_poly(P(1, C0 - d, lambda))).roots.size() == 0);
    CHECK(positive_roots(g_poly(P(1, C0 + d, lambda))).roots.size() == 2);
  }
  for (double lambda = 0.25; lambda <= 8.0; lambda += 0.25) {
    const double C0 = boundary_C0(Branch::Minus, lambda);
    const double d = 1e-3 * std::max(1.0, C0);
    CHECK(positive_roots(g_poly(P(-1, C0 - d, lambda))).roots.size() == 3);
    CHECK(positive_roots(g_poly(P(-1, C0 + d, lambda))).roots.size() == 1);
  }
}

TEST_CASE("roots straddle the pole when 24+3C+8 lambda < 0") {
  for (int i = 0; i < 300; ++i) {
    const double lambda = uniform(-12, -3.1);
    const double C = uniform(0, -(24 + 8 * lambda) / 3 - 1e-3);
    if (!(24 + 3 * C + 8 * lambda < 0)) continue;
    const auto rs = positive_roots(g_poly(P(-1, C, lambda)));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0].x < 1.0);
    CHECK(rs.roots[1].x > 1.0);
  }
}

TEST_CASE("prescribed roots round-trip") {
  int done = 0;
  while (done < 500) {
    const int a = pick(0, 1) ? 1 : -1;
    const double z = pick(0, 1) ? uniform(0.05, 0.98) : uniform(1.02, 3.0);
    int n = pick(1, 4) * (pick(0, 1) ? 1 : -1);
    if (a == -1 && n == 1 && z * z < 1.0 / 3) continue;
    if (a == -1 && n == -1 && z * z > 3.0) continue;
    const auto cl = c_lambda_from_root(branch_from_int(a), z, n);
    CHECK(df_dt_at_root(branch_from_int(a), cl.C, cl.lambda, z) == doctest::Approx(n).epsilon(1e-9));
    const GPoly g = g_poly(P(a, cl.C, cl.lambda));
    double scale = 0.0;
    for (int k = 0; k < 5; ++k) scale += std::abs(g.coeffs[k]) * std::pow(z * z, k);
    CHECK(std::abs(g(z * z)) / scale < 1e-9);
    ++done;
  }
}

TEST_CASE("lambda is shared by the root pairs") {
  for (int i = 0; i < 300; ++i) {
    const Branch a = pick(0, 1) ? Branch::Plus : Branch::Minus;
    const double z = uniform(0.1, 3.0);
    const int n = pick(0, 1) ? 1 : -1;
    const double l = lambda_from_root(a, z, n);
    const double partner = std::sqrt((2.0 - n) / (2.0 + n)) / z;
    CHECK(lambda_from_root(a, partner, n) == doctest::Approx(l).epsilon(1e-12));
    CHECK(lambda_from_root(a, 1 / z, -n) == doctest::Approx(l).epsilon(1e-12));
  }
}

TEST_CASE("obstruction equals the direct difference") {
  for (int i = 0; i < 300; ++i) {
    const int a = pick(0, 1) ? 1 : -1;
    const double z1 = uniform(0.1, 2.5);
    const int n = pick(0, 1) ? 1 : -1;
    const long double x1 = static_cast<long double>(z1) * z1;
    if (std::abs(x1 - 1) < 1e-2 || std::abs((2 + n) * x1 + a * (2 - n)) < 1e-2) continue;
    const double lambda = lambda_from_root(branch_from_int(a), z1, n);
    const long double z2 = companion_root(z1, n);
    if (std::abs(z2 * z2 - 1) < 1e-2) continue;
    const long double direct = oracle::C_for_root(a, lambda, x1) - oracle::C_for_root(a, lambda, z2 * z2);
    CHECK(two_root_obstruction(branch_from_int(a), z1, n) ==
          doctest::Approx(static_cast<double>(direct)).epsilon(1e-9));
  }
}

TEST_CASE("blow-up is reported from the leading coefficients") {
  for (int i = 0; i < 300; ++i) {
    const ModelParams p = random_pm();
    const GPoly g = model_poly(p);
    for (const auto& iv : positivity_intervals(p)) {
      const auto ends = endpoint_analysis(p, iv.s);
      if (iv.s.lo == 0.0 && g.g0() > 0) CHECK(ends[0].kind == EndpointKind::IncompleteBlowup);
      if (std::isinf(iv.s.hi) && g.g4() > 0) CHECK(ends[1].kind == EndpointKind::IncompleteBlowup);
    }
  }
}

TEST_CASE("Eguchi-Hanson metrics are homothetic") {
  const ModelParams p1 = P(0, -1, 0);
  const ModelParams p2 = P(0, -16, 0);
  const auto iv1 = positivity_intervals(p1).at(0);
  const auto iv2 = positivity_intervals(p2).at(0);
  const ArcLength a1(p1, iv1);
  const ArcLength a2(p2, iv2);
  for (double s : {1.001, 1.1, 1.5, 3.0, 10.0}) {
    const auto x = state_on(p1, iv1, s);
    const auto y = state_on(p2, iv2, 2 * s);
    CHECK(y.f == doctest::Approx(2 * x.f).epsilon(1e-12));
    CHECK(y.h == doctest::Approx(2 * x.h).epsilon(1e-12));
    CHECK(y.df_dt == doctest::Approx(x.df_dt).epsilon(1e-12));
    CHECK(y.d2f_dt2 == doctest::Approx(x.d2f_dt2 / 2).epsilon(1e-10));
    CHECK(std::abs(a2.t_of(2 * s) - 2 * a1.t_of(s)) < 1e-8);
  }
}

TEST_CASE("f solves the first-order relation") {
  for (int i = 0; i < 300; ++i) {
    const ModelParams p = random_pm();
    for (const auto& iv : positivity_intervals(p)) {
      const double s = interior(iv.s);
      const auto st = state_on(p, iv, s);
      const double a = value_of(p.a);
      const double lhs = st.f * st.f * (1 - a * st.h * st.h);
      const double rhs = st.h * st.dh_dt * st.h * st.dh_dt;
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9).scale(1e-12));
    }
  }
}

TEST_CASE("dr/dt and df/dt against finite differences in t") {
  const auto pr = page_roots();
  const ModelParams ps[] = {P(1, 0, 3), P(1, 0, pr.lambda), P(-1, 10, 0), P(0, -1, 0), P(0, -orbifold_D(4), -6),
                            P(-1, 8, -6)};
  for (const auto& p : ps) {
    for (const auto& iv : positivity_intervals(p)) {
      const ArcLength arc(p, iv);
      for (int k = 0; k < 5; ++k) {
        const double s = interior(iv.s);
        const double t = arc.t_of(s);
        const double step = 1e-3;
        const auto r = [&](double u) { return std::log(arc.s_of(u)); };
        const auto f = [&](double u) { return state_on(p, iv, arc.s_of(u)).f; };
        const auto st = state_on(p, iv, s);
        CHECK(oracle::d1(r, t, step) == doctest::Approx(st.f / (st.h * st.h)).epsilon(1e-6));
        CHECK(std::abs(oracle::d1(f, t, step) - st.df_dt) < 1e-5 * std::max(1.0, std::abs(st.df_dt)));
      }
    }
  }
}

TEST_CASE("t increases with s") {
  for (int i = 0; i < 100; ++i) {
    const ModelParams p = random_pm();
    for (const auto& iv : positivity_intervals(p)) {
      const ArcLength arc(p, iv);
      double prev = -kInf;
      for (int k = 1; k < 10; ++k) {
        const double s = std::isinf(iv.s.hi) ? (iv.s.lo == 0 ? 0.3 * k : iv.s.lo * (1 + 0.3 * k))
                                             : iv.s.lo + (iv.s.hi - iv.s.lo) * k / 10.0;
        const double t = arc.t_of(s);
        CHECK(t > prev);
        prev = t;
      }
    }
  }
}

TEST_CASE("halving the quadrature tolerance stays within the error estimate") {
  const auto pr = page_roots();
  const ModelParams ps[] = {P(1, 0, pr.lambda), P(-1, 10, 0), P(0, -1, 0), P(1, 0, 3)};
  for (const auto& p : ps) {
    const auto iv = positivity_intervals(p).at(0);
    const double s0 = iv.s.lo;
    const double s1 = std::isinf(iv.s.hi) ? s0 + 2.0 : 0.5 * (iv.s.lo + iv.s.hi);
    for (double tol : {1e-6, 1e-8, 1e-10}) {
      const auto a = t_of_s(p, s0, s1, tol);
      const auto b = t_of_s(p, s0, s1, tol / 2);
      CHECK(std::abs(a.value - b.value) <= a.error + 8 * std::numeric_limits<double>::epsilon() * a.value);
    }
  }
}

TEST_CASE("Koszul oracle agrees with the closed formulas to c step^2") {
  const FrameAlgebra alg;
  const double step = 1e-4;
  double calib = 0.0;
  for (double t : {0.4, 0.9, 1.6, 2.4}) {
    const auto a = ricci_diag(closed_form_sample(ClosedForm::Sphere4, t));
    const auto b = koszul_ricci_oracle(alg, closed_form_profile(ClosedForm::Sphere4), t, step);
    for (int i = 0; i < 3; ++i) calib = std::max(calib, std::abs(a[i] - b[i]));
  }
  // c measured on S^4 at the default step, with headroom for other profiles.
  const double c = 100 * std::max(calib, 1e-12) / (step * step);
  for (auto form : {ClosedForm::FubiniStudy, ClosedForm::ComplexHyperbolic, ClosedForm::RealHyperbolic}) {
    for (double t : {0.3, 0.8, 1.2}) {
      const auto a = ricci_diag(closed_form_sample(form, t));
      const auto b = koszul_ricci_oracle(alg, closed_form_profile(form), t, step);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) <= c * step * step);
    }
  }
}

TEST_CASE("critical points with G < 0 lie beyond the pole when 3C > |24 + 8 lambda|") {
  for (int i = 0; i < 300; ++i) {
    const double lambda = uniform(-6, 0);
    const double C = uniform(std::abs(24 + 8 * lambda) / 3 + 0.1, 60);
    const ModelParams p = P(-1, C, lambda);
    const Polynomial G = g_poly(p).polynomial();
    for (const auto& r : positive_roots(G.derivative()).roots) {
      if (G(r.x) < 0) CHECK(r.x > 1.0);
    }
    // (24+3C+8 lambda)(x-1)(x+1)^3 - (G'/2 - G) = (x-1)[g4 (2x^3+3x+1) + 48x - 2 g0].
    const double g4 = 24 + 3 * C + 8 * lambda;
    const double g0 = 24 - 3 * C + 8 * lambda;
    for (double x : {0.3, 0.8, 1.5, 2.5}) {
      const double lhs = g4 * (x - 1) * std::pow(x + 1, 3) - (0.5 * G.derivative_at(x) - G(x));
      const double rhs = (x - 1) * (g4 * (2 * x * x * x + 3 * x + 1) + 48 * x - 2 * g0);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("labels are attached exactly at the named parameters") {
  for (auto name : {SolutionName::Flat, SolutionName::FubiniStudy, SolutionName::ComplexHyperbolic,
                    SolutionName::Sphere4, SolutionName::Page, SolutionName::RealHyperbolic,
                    SolutionName::EguchiHanson}) {
    const auto fam = named_solution(name);
    bool labelled = false;
    for (const auto& r : classify_case(fam.params)) labelled |= r.label.has_value();
    CHECK(labelled);
    ModelParams off = fam.params;
    if (off.a == Branch::Zero) off.C += 1e-3;
    else off.lambda += 1e-3;
    for (const auto& r : classify_case(off)) {
      if (name == SolutionName::EguchiHanson) break;
      CHECK_FALSE(r.label.has_value());
    }
  }
}

TEST_CASE("verdicts are invariant under homothety at a = 0") {
  for (int i = 0; i < 100; ++i) {
    const double lambda = pick(0, 2) == 0 ? 0.0 : uniform(-12, 12);
    const double C = uniform(-2, 2);
    const double k = uniform(0.3, 3.0);
    const auto a = classify_case(P(0, C, lambda));
    const auto b = classify_case(P(0, C * k * k * k * k, lambda / (k * k)));
    REQUIRE(a.size() == b.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      CHECK(a[j].case_id == b[j].case_id);
      CHECK(a[j].complete == b[j].complete);
      CHECK(a[j].smooth == b[j].smooth);
      CHECK(a[j].orbifold_n == b[j].orbifold_n);
    }
  }
}

TEST_CASE("closed forms are Einstein on interior grids") {
  for (auto name : {SolutionName::Flat, SolutionName::FubiniStudy, SolutionName::ComplexHyperbolic,
                    SolutionName::Sphere4, SolutionName::RealHyperbolic}) {
    const auto fam = named_solution(name);
    const auto range = closed_form_t_range(*fam.closed_form);
    const double hi = std::isinf(range.hi) ? 6.0 : range.hi;
    std::vector<ProfileSample> samples;
    for (int i = 1; i <= 100; ++i) samples.push_back(closed_form_sample(*fam.closed_form, range.lo + (hi - range.lo) * i / 101));
    CHECK(einstein_residual(fam.params, samples) < 1e-8);
  }
}

TEST_CASE("sweeps do not depend on the worker count") {
  GridSpec g;
  for (int i = 0; i < 40; ++i) g.points.push_back(random_pm());
  const auto a = sweep(g, 1);
  const auto b = sweep(g, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].input == b[i].input);
    CHECK(a[i].s_interval == b[i].s_interval);
    CHECK(a[i].complete == b[i].complete);
  }
}
