#pragma once

#include <array>

#include "g2c/nablaphi.hpp"

namespace g2c {

/// The 18 quadratic invariants of alpha. Roman indices run over f1..f6 only;
/// xi slots appear where the table writes them.
template <Scalar S>
struct InvariantVector {
  std::array<S, 18> i;
  /// Sum of alpha^2 over all 343 adapted-basis triples, xi included.
  S norm2;
  /// c12(z) = sum_{a<=6} alpha(f_a, f_a, z), on the adapted basis.
  Vector7<S> c12;
  /// sum_{k<=6} c12(f_k)^2.
  S c12_norm2;

  /// 1-based access, i_1 .. i_18.
  const S& at(int m) const { return i[static_cast<std::size_t>(m - 1)]; }
};

template <Scalar S>
InvariantVector<S> quadratic_invariants(const CovDerivTensor<S>& t, const ACMS<S>& a);

template <Scalar S>
Vector7<S> contraction_c12(const CovDerivTensor<S>& t);

template <Scalar S>
S alpha_norm2(const CovDerivTensor<S>& t);

}  // namespace g2c
