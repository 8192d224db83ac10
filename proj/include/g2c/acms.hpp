#pragma once

#include "g2c/check_report.hpp"
#include "g2c/exterior.hpp"
#include "g2c/g2.hpp"

namespace g2c {

/// Almost contact metric structure (phi, xi, eta, g) on the frame. Fields are
/// public so tests can hand-build structures that break the axioms.
template <Scalar S>
struct ACMS {
  Vector7<S> xi;
  /// eta(x) = sum_k eta[k] x_k; for induced structures eta = xi.
  Vector7<S> eta;
  /// Column j holds phi(e_j).
  Matrix7<S> phi_endo;
  /// Phi(x, y) = g(x, phi y).
  KForm<S> Phi{2};

  Vector7<S> phi(const Vector7<S>& x) const { return apply(phi_endo, x); }
};

/// phi(x) = xi × x, eta(x) = g(xi, x). Throws ValidationError when g(xi, xi) != 1,
/// reporting the measured squared norm.
template <Scalar S>
ACMS<S> induce_acms(const G2Structure<S>& g2, const Vector7<S>& xi);

/// Orthonormal (f1..f6, xi) with xi last.
template <Scalar S>
struct AdaptedBasis {
  std::array<Vector7<S>, kDim> vectors;

  const Vector7<S>& operator[](int a) const { return vectors[static_cast<std::size_t>(a)]; }
  const Vector7<S>& xi() const { return vectors[kDim - 1]; }
  /// Components of a frame vector in this basis.
  Vector7<S> coords(const Vector7<S>& x) const;
};

/// Householder construction. With m the index of the largest |xi_m| (lowest on
/// ties) and s = sign xi_m, H = I - 2 w w^T / (w^T w) for w = xi - s e_m swaps xi
/// and s e_m; the f's are H e_i for i != m in index order. Rational in, rational out.
template <Scalar S>
AdaptedBasis<S> adapted_basis(const Vector7<S>& xi);

/// P[a][c] = g(phi b_a, b_c): the endomorphism phi in adapted coordinates (row a is phi b_a).
template <Scalar S>
Matrix7<S> phi_in_basis(const ACMS<S>& a, const AdaptedBasis<S>& b);

/// (f1, f2) -> (c f1 + s f2, -s f1 + c f2). Requires c^2 + s^2 = 1.
template <Scalar S>
AdaptedBasis<S> rotate_first_pair(const AdaptedBasis<S>& b, const S& c, const S& s);

/// Inverse stereographic projection (2u, 1 - |u|^2) / (1 + |u|^2).
Vector7<Rational> rational_unit_vector(const std::array<Rational, 6>& u);

template <Scalar S>
CheckReport validate_acms(const ACMS<S>& a);

template <Scalar S>
CheckReport validate_adapted_basis(const AdaptedBasis<S>& b, const Vector7<S>& xi);

}  // namespace g2c
