#include "einstein_cyl/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "einstein_cyl/error.hpp"

namespace ecyl {

namespace {

using Mat4 = std::array<std::array<double, 4>, 4>;
using Gamma = std::array<std::array<std::array<double, 4>, 4>, 4>;

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

double frobenius(const Mat4& a, const Mat4& b) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += a[i][j] * b[i][j];
  return acc;
}

// Left multiplication by i, j, k on q = q0 + q1 i + q2 j + q3 k.
std::array<Mat4, 3> quaternion_units() {
  return {{
      {{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
      {{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}},
      {{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
  }};
}

void check_sample(const ProfileSample& s) {
  for (double v : {s.f, s.h, s.df_dt, s.dh_dt, s.d2f_dt2, s.d2h_dt2}) {
    if (!std::isfinite(v)) throw Error(ErrorKind::InvalidSample, "non-finite profile value");
  }
  if (!(s.f > 0.0 && s.h > 0.0)) throw Error(ErrorKind::InvalidSample, "f and h must be positive");
}

Gamma connection(const StructureTable& c) {
  Gamma g{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) g[i][j][k] = 0.5 * (c[i][j][k] - c[j][k][i] + c[k][i][j]);
  return g;
}

}  // namespace

BaseBrackets hopf_brackets() {
  BaseBrackets b{};
  const auto set = [&b](int i, int j, int k, double v) {
    b[i][j][k] = v;
    b[j][i][k] = -v;
  };
  set(0, 1, 2, -2.0);
  set(0, 2, 1, 2.0);
  set(1, 2, 0, -2.0);
  return b;
}

BaseBrackets quaternion_brackets() {
  const auto L = quaternion_units();
  BaseBrackets b{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Mat4 ba = mul(L[j], L[i]);
      const Mat4 ab = mul(L[i], L[j]);
      Mat4 m{};
      for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) m[r][s] = ba[r][s] - ab[r][s];
      for (int k = 0; k < 3; ++k) b[i][j][k] = frobenius(m, L[k]) / frobenius(L[k], L[k]);
    }
  }
  return b;
}

StructureTable FrameAlgebra::structure_constants(const ProfileSample& s) const {
  const std::array<double, 3> phi{s.f, s.h, s.h};
  const std::array<double, 3> dphi{s.df_dt, s.dh_dt, s.dh_dt};
  StructureTable c{};
  for (int i = 0; i < 3; ++i) {
    const double v = -dphi[i] / phi[i];
    c[0][i + 1][i + 1] = v;
    c[i + 1][0][i + 1] = -v;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i + 1][j + 1][k + 1] = base_[i][j][k] * phi[k] / (phi[i] * phi[j]);
  return c;
}

double antisymmetry_defect(const StructureTable& c) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(c[i][j][k] + c[j][i][k]));
  return m;
}

RicciDiag ricci_diag(const ProfileSample& s) {
  check_sample(s);
  const double f = s.f, h = s.h;
  const double fp = s.df_dt, hp = s.dh_dt;
  const double h2 = h * h;
  const double f2h4 = f * f / (h2 * h2);
  const double mixed = fp * hp / (f * h);
  RicciDiag r;
  r.ric00 = -s.d2f_dt2 / f - 2.0 * s.d2h_dt2 / h;
  r.ric11 = -s.d2f_dt2 / f - 2.0 * mixed + 2.0 * f2h4;
  r.ric22 = -s.d2h_dt2 / h - mixed - (hp / h) * (hp / h) + 4.0 / h2 - 2.0 * f2h4;
  return r;
}

std::array<double, 4> koszul_ricci_components(const FrameAlgebra& algebra, const ProfileFn& profile, double t,
                                               double fd_step) {
  if (!(fd_step > 0.0)) throw Error(ErrorKind::Usage, "fd_step must be positive");
  static constexpr std::array<double, 5> kOffsets{-2.0, -1.0, 0.0, 1.0, 2.0};
  static constexpr std::array<double, 5> kWeights{1.0, -8.0, 0.0, 8.0, -1.0};
  std::array<Gamma, 5> gammas{};
  StructureTable c0{};
  for (int m = 0; m < 5; ++m) {
    ProfileSample s;
    try {
      s = profile(t + kOffsets[m] * fd_step);
    } catch (const Error& e) {
      throw Error(ErrorKind::Domain, std::string("stencil leaves the positivity domain: ") + e.what());
    }
    if (!(s.f > 0.0 && s.h > 0.0) || !std::isfinite(s.f) || !std::isfinite(s.h) || !std::isfinite(s.df_dt) ||
        !std::isfinite(s.dh_dt)) {
      throw Error(ErrorKind::Domain, "stencil leaves the positivity domain");
    }
    const StructureTable c = algebra.structure_constants(s);
    gammas[m] = connection(c);
    if (m == 2) c0 = c;
  }
  const Gamma& g = gammas[2];
  Gamma dg{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        double acc = 0.0;
        for (int m = 0; m < 5; ++m) acc += kWeights[m] * gammas[m][i][j][k];
        dg[i][j][k] = acc / (12.0 * fd_step);
      }

  // <R(e_a, e_b) e_c, e_d>
  const auto riemann = [&](int a, int b, int cc, int d) {
    double v = 0.0;
    if (a == 0) v += dg[b][cc][d];
    if (b == 0) v -= dg[a][cc][d];
    for (int k = 0; k < 4; ++k) {
      v += g[b][cc][k] * g[a][k][d] - g[a][cc][k] * g[b][k][d];
      v -= c0[a][b][k] * g[k][cc][d];
    }
    return v;
  };
  std::array<double, 4> ric{};
  for (int b = 0; b < 4; ++b)
    for (int a = 0; a < 4; ++a) ric[b] += riemann(a, b, b, a);
  return ric;
}

RicciDiag koszul_ricci_oracle(const FrameAlgebra& algebra, const ProfileFn& profile, double t, double fd_step) {
  const auto ric = koszul_ricci_components(algebra, profile, t, fd_step);
  return {ric[0], ric[1], ric[2]};
}

double einstein_residual(const ModelParams& params, const std::vector<ProfileSample>& samples) {
  if (samples.empty()) throw Error(ErrorKind::Usage, "einstein_residual needs at least one sample");
  double worst = 0.0;
  for (const auto& s : samples) {
    const RicciDiag r = ricci_diag(s);
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(r[i] - params.lambda));
  }
  return worst;
}

B45Residuals b4_b5_residuals(const ProfileSample& s, const ModelParams& params) {
  const RicciDiag r = ricci_diag(s);
  const double f = s.f, h = s.h;
  const double h2 = h * h;
  const double f2h4 = f * f / (h2 * h2);
  const double mixed = s.df_dt * s.dh_dt / (f * h);
  B45Residuals out;
  out.b4 = s.d2h_dt2 / h - mixed + f2h4;
  out.b5 = -2.0 * mixed - (s.dh_dt / h) * (s.dh_dt / h) - f2h4 + 4.0 / h2 - params.lambda;
  const double r1 = r.ric00 - params.lambda;
  const double r2 = r.ric11 - params.lambda;
  const double r3 = r.ric22 - params.lambda;
  out.identity_defect =
      std::max(std::abs(out.b4 + 0.5 * (r1 - r2)), std::abs(out.b5 - 0.5 * (r2 - r1 + 2.0 * r3)));
  return out;
}

}  // namespace ecyl
