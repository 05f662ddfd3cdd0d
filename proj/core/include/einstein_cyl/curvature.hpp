#pragma once

#include <array>
#include <vector>

#include "einstein_cyl/reparam.hpp"
#include "einstein_cyl/types.hpp"

namespace ecyl {

// b[i][j][k]: [X_{i+1}, X_{j+1}] = sum_k b[i][j][k] X_{k+1} for the left-invariant fields on S^3.
using BaseBrackets = std::array<std::array<std::array<double, 3>, 3>, 3>;

// c[a][b][k] = <[e_a, e_b], e_k> for the orthonormal frame e0 = d/dt, e1 = X1/f, e2 = X2/h, e3 = X3/h.
using StructureTable = std::array<std::array<std::array<double, 4>, 4>, 4>;

// [X1,X2] = -2 X3, [X1,X3] = 2 X2, [X2,X3] = -2 X1.
BaseBrackets hopf_brackets();

// Brackets recomputed from the linear vector fields x -> L_i x on R^4, where
// L_1, L_2, L_3 are left multiplication by the quaternion units i, j, k:
// [Ax, Bx] = (BA - AB) x, decomposed in the basis L_k.
BaseBrackets quaternion_brackets();

class FrameAlgebra {
 public:
  FrameAlgebra() : FrameAlgebra(hopf_brackets()) {}
  explicit FrameAlgebra(const BaseBrackets& base) : base_(base) {}

  const BaseBrackets& base() const { return base_; }

  // [e0, e_i] = -(phi_i'/phi_i) e_i, [e_i, e_j] = sum_k b_ijk phi_k / (phi_i phi_j) e_k
  // with phi = (f, h, h).
  StructureTable structure_constants(const ProfileSample& sample) const;

 private:
  BaseBrackets base_;
};

// Largest |c[i][j][k] + c[j][i][k]|.
double antisymmetry_defect(const StructureTable& c);

// Ric00 = -f''/f - 2h''/h
// Ric11 = -f''/f - 2f'h'/(fh) + 2f^2/h^4
// Ric22 = -h''/h - f'h'/(fh) - (h'/h)^2 + 4/h^2 - 2f^2/h^4
RicciDiag ricci_diag(const ProfileSample& sample);

// Diagonal Ricci from the Levi-Civita connection of the frame:
// Gamma_ijk = <nabla_{e_i} e_j, e_k> = (c_ijk - c_jki + c_kij) / 2,
// <R(a,b)c,d> = e_a(Gamma_bcd) - e_b(Gamma_acd) + sum_k (Gamma_bck Gamma_akd - Gamma_ack Gamma_bkd)
//             - sum_k c_abk Gamma_kcd,
// Ric_bb = sum_a <R(e_a,e_b)e_b,e_a>. The t-derivatives of Gamma use a
// 5-point central stencil of width fd_step on the profile; only f, h, f', h'
// of the stencil samples enter.
RicciDiag koszul_ricci_oracle(const FrameAlgebra& algebra, const ProfileFn& profile, double t,
                              double fd_step = 1e-4);

// All four Ric_bb from the same computation; entries 2 and 3 agree by the
// symmetry of the ansatz.
std::array<double, 4> koszul_ricci_components(const FrameAlgebra& algebra, const ProfileFn& profile, double t,
                                              double fd_step = 1e-4);

// max over samples of max_i |Ric_ii - lambda|.
double einstein_residual(const ModelParams& params, const std::vector<ProfileSample>& samples);

struct B45Residuals {
  double b4 = 0.0;               // h''/h - f'h'/(fh) + f^2/h^4
  double b5 = 0.0;               // -2f'h'/(fh) - (h'/h)^2 - f^2/h^4 + 4/h^2 - lambda
  double identity_defect = 0.0;  // against b4 = -(r1 - r2)/2, b5 = (r2 - r1 + 2 r3)/2
};

// r_i = Ric_ii - lambda from ricci_diag.
B45Residuals b4_b5_residuals(const ProfileSample& sample, const ModelParams& params);

}  // namespace ecyl
