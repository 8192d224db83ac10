#pragma once

#include "g2c/invariants.hpp"

namespace g2c {

/// Everything that depends on the frame manifold and its 3-form only.
template <Scalar S>
struct Manifold {
  StructureConstants<S> sc;
  Connection<S> conn;
  G2Structure<S> g2;
  G2ClassProbe<S> probe;

  /// parallel, or d phi = k * (star phi) with k != 0.
  bool nearly_parallel() const;
};

template <Scalar S>
Manifold<S> make_manifold(const StructureConstants<S>& sc, const G2Structure<S>& g2);

/// Everything that additionally depends on the unit field xi.
template <Scalar S>
struct Instance {
  ACMS<S> acms;
  AdaptedBasis<S> basis;
  CovDerivTensor<S> tensor;
  XiDiagnostics<S> diag;
  InvariantVector<S> inv;

  /// max(1, ||alpha||^2), the scale for float zero tests on quadratic quantities.
  double scale() const;
};

template <Scalar S>
Instance<S> make_instance(const Manifold<S>& m, const Vector7<S>& xi);

}  // namespace g2c
