#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "einstein_cyl/curvature.hpp"
#include "einstein_cyl/error.hpp"
#include "support/oracle.hpp"

using namespace ecyl;

namespace {

ModelParams P(int a, double C, double lambda) { return {branch_from_int(a), C, lambda}; }

void check_all(const RicciDiag& r, double v, double tol) {
  CHECK(std::abs(r.ric00 - v) < tol);
  CHECK(std::abs(r.ric11 - v) < tol);
  CHECK(std::abs(r.ric22 - v) < tol);
}

std::vector<ProfileSample> grid(ClosedForm form, double lo, double hi, int n) {
  std::vector<ProfileSample> out;
  for (int i = 1; i <= n; ++i) out.push_back(closed_form_sample(form, lo + (hi - lo) * i / (n + 1)));
  return out;
}

}  // namespace

TEST_CASE("closed-form Ricci examples") {
  check_all(ricci_diag({2, kNaN, 2, 2, 1, 1, 0, 0}), 0.0, 1e-15);
  check_all(ricci_diag(closed_form_sample(ClosedForm::Sphere4, std::numbers::pi / 3)), 3.0, 1e-14);
  check_all(ricci_diag(closed_form_sample(ClosedForm::RealHyperbolic, 1.0)), -3.0, 1e-14);
}

TEST_CASE("ricci_diag matches the long double formulas") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.2, 3.0), any(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    ProfileSample s;
    s.f = pos(rng);
    s.h = pos(rng);
    s.df_dt = any(rng);
    s.dh_dt = any(rng);
    s.d2f_dt2 = any(rng);
    s.d2h_dt2 = any(rng);
    const auto r = ricci_diag(s);
    const auto ref = oracle::ricci(s.f, s.h, s.df_dt, s.dh_dt, s.d2f_dt2, s.d2h_dt2);
    CHECK(r.ric00 == doctest::Approx(ref.r00).epsilon(1e-12).scale(1.0));
    CHECK(r.ric11 == doctest::Approx(ref.r11).epsilon(1e-12).scale(1.0));
    CHECK(r.ric22 == doctest::Approx(ref.r22).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("invalid samples") {
  ProfileSample s = closed_form_sample(ClosedForm::Sphere4, 1.0);
  s.d2h_dt2 = kNaN;
  CHECK_THROWS_AS(ricci_diag(s), Error);
  s = closed_form_sample(ClosedForm::Sphere4, 1.0);
  s.f = 0.0;
  try {
    ricci_diag(s);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidSample);
  }
}

TEST_CASE("structure constants") {
  const FrameAlgebra alg;
  const ProfileSample unit{0, kNaN, 1, 1, 0, 0, 0, 0};
  const auto c = alg.structure_constants(unit);
  CHECK(antisymmetry_defect(c) == 0.0);
  CHECK(c[1][2][3] == -2.0);
  CHECK(c[1][3][2] == 2.0);
  CHECK(c[2][3][1] == -2.0);
  for (int i = 0; i < 4; ++i) CHECK(c[0][i][i] == 0.0);

  const auto c2 = alg.structure_constants(closed_form_sample(ClosedForm::ComplexHyperbolic, 0.8));
  CHECK(antisymmetry_defect(c2) < 1e-15);
}

TEST_CASE("quaternion brackets reproduce the Hopf table") {
  const auto q = quaternion_brackets();
  const auto h = hopf_brackets();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(q[i][j][k] == doctest::Approx(h[i][j][k]).epsilon(1e-15));
}

TEST_CASE("koszul oracle examples") {
  const FrameAlgebra alg;
  check_all(koszul_ricci_oracle(alg, closed_form_profile(ClosedForm::Sphere4), std::numbers::pi / 3), 3.0, 1e-6);
  check_all(koszul_ricci_oracle(alg, closed_form_profile(ClosedForm::Flat), 1.0), 0.0, 1e-6);
  for (double s : {1.2, 1.5, 3.0}) {
    check_all(koszul_ricci_oracle(alg, local_chart(P(0, -1, 0), s), 0.0), 0.0, 1e-6);
  }
  const auto all = koszul_ricci_components(alg, closed_form_profile(ClosedForm::FubiniStudy), 0.6);
  CHECK(all[2] == doctest::Approx(all[3]).epsilon(1e-12));
  CHECK(all[2] == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("koszul oracle errors") {
  const FrameAlgebra alg;
  CHECK_THROWS_AS(koszul_ricci_oracle(alg, closed_form_profile(ClosedForm::Flat), 1.0, 0.0), Error);
  try {
    koszul_ricci_oracle(alg, closed_form_profile(ClosedForm::Flat), 1e-5, 1e-4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
  try {
    koszul_ricci_oracle(alg, local_chart(P(0, -1, 0), 1.0 + 1e-9), 0.0, 1e-4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
}

TEST_CASE("einstein residuals of closed forms") {
  CHECK(einstein_residual(P(1, 0, 3), grid(ClosedForm::Sphere4, 0, std::numbers::pi, 100)) < 1e-10);
  CHECK(einstein_residual(P(0, 0, 0), grid(ClosedForm::Flat, 0, 5, 100)) < 1e-13);
  CHECK(einstein_residual(P(0, 0, 6), grid(ClosedForm::FubiniStudy, 0, std::numbers::pi / 2, 100)) < 1e-10);
  CHECK_THROWS_AS(einstein_residual(P(0, 0, 0), {}), Error);
}

TEST_CASE("B4 and B5") {
  const auto pr = page_roots();
  for (const ModelParams& p : {P(1, 0, 3), P(1, 0, pr.lambda), P(-1, 8, 0), P(-1, 2, -6)}) {
    for (double s : {0.8, 0.9, 1.1}) {
      if (!(radicand(p)(s * s) > 0)) continue;
      const auto r = b4_b5_residuals(state_at(p, s), p);
      CHECK(std::abs(r.b4) < 1e-10);
      CHECK(std::abs(r.b5) < 1e-10);
      CHECK(r.identity_defect < 1e-12);
    }
  }
  // The identities hold for arbitrary samples, Einstein or not.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(0.3, 2.0), any(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const ProfileSample s{0, kNaN, pos(rng), pos(rng), any(rng), any(rng), any(rng), any(rng)};
    CHECK(b4_b5_residuals(s, P(0, 0, any(rng))).identity_defect < 1e-11);
  }
}

TEST_CASE("ricci_diag is homogeneous of degree -2") {
  const ProfileSample s = closed_form_sample(ClosedForm::FubiniStudy, 0.4);
  for (double k : {0.5, 2.0, 7.0}) {
    ProfileSample t = s;
    t.f *= k;
    t.h *= k;
    t.d2f_dt2 /= k;
    t.d2h_dt2 /= k;
    const auto a = ricci_diag(s);
    const auto b = ricci_diag(t);
    CHECK(b.ric00 == doctest::Approx(a.ric00 / (k * k)).epsilon(1e-13));
    CHECK(b.ric11 == doctest::Approx(a.ric11 / (k * k)).epsilon(1e-13));
    CHECK(b.ric22 == doctest::Approx(a.ric22 / (k * k)).epsilon(1e-13));
  }
}
