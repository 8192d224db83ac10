#pragma once

#include <string>

#include "g2c/acms.hpp"
#include "g2c/check_report.hpp"
#include "g2c/frame.hpp"

namespace g2c {

/// alpha(x, y, z) = (nabla_x Phi)(y, z).
template <Scalar S>
struct CovDerivTensor {
  /// alpha[a][b][c] on the adapted basis (f1..f6, xi); xi has index 6.
  Tensor3<S> alpha = zero_tensor<S>();
  /// Components on the raw frame e1..e7, before the change of basis.
  Tensor3<S> frame = zero_tensor<S>();
  AdaptedBasis<S> basis;

  /// alpha on vectors given in adapted coordinates.
  S operator()(const Vector7<S>& x, const Vector7<S>& y, const Vector7<S>& z) const;
  /// alpha on vectors given in frame coordinates.
  S on_frame(const Vector7<S>& x, const Vector7<S>& y, const Vector7<S>& z) const;
};

/// t'[a][b][c] = sum t[i][j][k] b_a^i b_b^j b_c^k, contracted one slot at a time.
template <Scalar S>
Tensor3<S> change_basis(const Tensor3<S>& t, const AdaptedBasis<S>& b);

/// (nabla_x Phi)(y, z) = g(y, nabla_x(xi × z)) + g(nabla_x z, xi × y) on frame vectors.
template <Scalar S>
Tensor3<S> nabla_phi_frame(const Connection<S>& conn, const ACMS<S>& a);

template <Scalar S>
CovDerivTensor<S> nabla_phi_tensor(const Connection<S>& conn, const ACMS<S>& a, const AdaptedBasis<S>& basis);

/// Antisymmetry in the last two slots and the C-space symmetry
/// alpha(x,y,z) = -alpha(x,phi y,phi z) + eta(y) alpha(x,xi,z) + eta(z) alpha(x,y,xi).
template <Scalar S>
CheckReport validate_tensor(const CovDerivTensor<S>& t, const ACMS<S>& a);

template <Scalar S>
struct XiDiagnostics {
  /// Row i is nabla_{e_i} xi.
  Matrix7<S> nabla_xi;
  Vector7<S> nabla_xi_xi;
  S div_xi;
  /// v = sum_{j<=6} f_j × nabla_{f_j} xi.
  Vector7<S> v;
  S g_xi_v;
  /// Computed as sum_b g(xi, nabla_b b), independently of div_xi.
  S delta_eta;
  bool is_killing = true;
  std::string killing_witness;
  /// nabla xi = 0 in every direction.
  bool xi_parallel = true;
};

template <Scalar S>
XiDiagnostics<S> xi_diagnostics(const Connection<S>& conn, const G2Structure<S>& g2, const ACMS<S>& a,
                                const AdaptedBasis<S>& basis);

/// delta Phi(b_x) = -sum_b alpha(b, b, b_x), components on the adapted basis.
template <Scalar S>
Vector7<S> codifferential_phi(const CovDerivTensor<S>& t);

/// delta Phi(e_x) = -sum_i (nabla_{e_i} Phi)(e_i, e_x), traced on the raw frame.
template <Scalar S>
Vector7<S> codifferential_phi_frame(const CovDerivTensor<S>& t);

/// Column j is (nabla_x phi)(e_j) = nabla_x(xi × e_j) - xi × nabla_x e_j.
template <Scalar S>
Matrix7<S> nabla_phi_endomorphism(const Connection<S>& conn, const G2Structure<S>& g2, const ACMS<S>& a,
                                  const Vector7<S>& x);

template <Scalar S>
Matrix7<S> nabla_xi_phi(const Connection<S>& conn, const G2Structure<S>& g2, const ACMS<S>& a);

/// Column j is y × e_j.
template <Scalar S>
Matrix7<S> cross_matrix(const G2Structure<S>& g2, const Vector7<S>& y);

}  // namespace g2c
