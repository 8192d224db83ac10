#include "g2c/instance.hpp"

namespace g2c {

template <Scalar S>
bool Manifold<S>::nearly_parallel() const {
  return probe.parallel || (probe.nearly_parallel && !is_zero(*probe.nearly_parallel));
}

template <Scalar S>
Manifold<S> make_manifold(const StructureConstants<S>& sc, const G2Structure<S>& g2) {
  Connection<S> conn = levi_civita(sc);
  G2ClassProbe<S> probe = g2_class_probe(sc, conn, g2);
  return Manifold<S>{sc, std::move(conn), g2, std::move(probe)};
}

template <Scalar S>
double Instance<S>::scale() const {
  const double n = ScalarTraits<S>::to_double(inv.norm2);
  return n > 1.0 ? n : 1.0;
}

template <Scalar S>
Instance<S> make_instance(const Manifold<S>& m, const Vector7<S>& xi) {
  ACMS<S> acms = induce_acms(m.g2, xi);
  AdaptedBasis<S> basis = adapted_basis(xi);
  CovDerivTensor<S> tensor = nabla_phi_tensor(m.conn, acms, basis);
  XiDiagnostics<S> diag = xi_diagnostics(m.conn, m.g2, acms, basis);
  InvariantVector<S> inv = quadratic_invariants(tensor, acms);
  return Instance<S>{std::move(acms), std::move(basis), std::move(tensor), std::move(diag), std::move(inv)};
}

template struct Manifold<Rational>;
template struct Manifold<double>;
template struct Instance<Rational>;
template struct Instance<double>;
template Manifold<Rational> make_manifold(const StructureConstants<Rational>&, const G2Structure<Rational>&);
template Manifold<double> make_manifold(const StructureConstants<double>&, const G2Structure<double>&);
template Instance<Rational> make_instance(const Manifold<Rational>&, const Vector7<Rational>&);
template Instance<double> make_instance(const Manifold<double>&, const Vector7<double>&);

}  // namespace g2c
