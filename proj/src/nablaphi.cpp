#include "g2c/nablaphi.hpp"

namespace g2c {

namespace {

std::string b(int a) { return a == kDim - 1 ? std::string("xi") : "f" + std::to_string(a + 1); }

template <Scalar S>
S contract3(const Tensor3<S>& t, const Vector7<S>& x, const Vector7<S>& y, const Vector7<S>& z) {
  S total(0);
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < kDim; ++j) {
      if (is_zero(y[j])) continue;
      const S xy = x[i] * y[j];
      for (int k = 0; k < kDim; ++k)
        if (!is_zero(z[k])) total += xy * z[k] * t[i][j][k];
    }
  }
  return total;
}

template <Scalar S>
double tensor_scale(const Tensor3<S>& t) {
  S n(0);
  for (const auto& p : t)
    for (const auto& q : p)
      for (const auto& x : q) n += x * x;
  const double d = ScalarTraits<S>::to_double(n);
  return d > 1.0 ? d : 1.0;
}

}  // namespace

template <Scalar S>
S CovDerivTensor<S>::operator()(const Vector7<S>& x, const Vector7<S>& y, const Vector7<S>& z) const {
  return contract3(alpha, x, y, z);
}

template <Scalar S>
S CovDerivTensor<S>::on_frame(const Vector7<S>& x, const Vector7<S>& y, const Vector7<S>& z) const {
  return contract3(frame, x, y, z);
}

template <Scalar S>
Tensor3<S> change_basis(const Tensor3<S>& t, const AdaptedBasis<S>& basis) {
  Tensor3<S> t1 = zero_tensor<S>();
  for (int a = 0; a < kDim; ++a)
    for (int i = 0; i < kDim; ++i) {
      const S& w = basis[a][i];
      if (is_zero(w)) continue;
      for (int j = 0; j < kDim; ++j)
        for (int k = 0; k < kDim; ++k) t1[a][j][k] += w * t[i][j][k];
    }
  Tensor3<S> t2 = zero_tensor<S>();
  for (int c = 0; c < kDim; ++c)
    for (int j = 0; j < kDim; ++j) {
      const S& w = basis[c][j];
      if (is_zero(w)) continue;
      for (int a = 0; a < kDim; ++a)
        for (int k = 0; k < kDim; ++k) t2[a][c][k] += w * t1[a][j][k];
    }
  Tensor3<S> t3 = zero_tensor<S>();
  for (int d = 0; d < kDim; ++d)
    for (int k = 0; k < kDim; ++k) {
      const S& w = basis[d][k];
      if (is_zero(w)) continue;
      for (int a = 0; a < kDim; ++a)
        for (int c = 0; c < kDim; ++c) t3[a][c][d] += w * t2[a][c][k];
    }
  return t3;
}

template <Scalar S>
Tensor3<S> nabla_phi_frame(const Connection<S>& conn, const ACMS<S>& a) {
  std::array<Vector7<S>, kDim> phi_e;
  for (int k = 0; k < kDim; ++k) phi_e[k] = a.phi(basis_vector<S>(k));
  Tensor3<S> t = zero_tensor<S>();
  for (int i = 0; i < kDim; ++i) {
    const Vector7<S> ei = basis_vector<S>(i);
    for (int k = 0; k < kDim; ++k) {
      const Vector7<S> d_phi_ek = conn.nabla(ei, phi_e[k]);  // nabla_{e_i}(xi × e_k)
      const Vector7<S>& d_ek = conn.gamma[i][k];             // nabla_{e_i} e_k
      for (int j = 0; j < kDim; ++j) t[i][j][k] = d_phi_ek[j] + dot(d_ek, phi_e[j]);
    }
  }
  return t;
}

template <Scalar S>
CovDerivTensor<S> nabla_phi_tensor(const Connection<S>& conn, const ACMS<S>& a, const AdaptedBasis<S>& basis) {
  CovDerivTensor<S> t;
  t.frame = nabla_phi_frame(conn, a);
  t.alpha = change_basis(t.frame, basis);
  t.basis = basis;
  return t;
}

template <Scalar S>
CheckReport validate_tensor(const CovDerivTensor<S>& t, const ACMS<S>& a) {
  CheckItem anti{"alpha(x,y,z) = -alpha(x,z,y)", true, {}};
  CheckItem csym{"C-space symmetry", true, {}};
  const auto& al = t.alpha;
  const Matrix7<S> P = phi_in_basis(a, t.basis);
  const double scale = tensor_scale(al);
  constexpr int X = kDim - 1;
  // half[i][p][k] = alpha(b_i, b_p, phi b_k)
  Tensor3<S> half = zero_tensor<S>();
  for (int i = 0; i < kDim; ++i)
    for (int p = 0; p < kDim; ++p)
      for (int k = 0; k < kDim; ++k)
        for (int q = 0; q < kDim; ++q)
          if (!is_zero(P[k][q])) half[i][p][k] += P[k][q] * al[i][p][q];
  auto where = [](int i, int j, int k) { return "(" + b(i) + "," + b(j) + "," + b(k) + ")"; };
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const S s = al[i][j][k] + al[i][k][j];
        if (anti.passed && !is_zero(s, scale)) {
          anti.passed = false;
          anti.witness = where(i, j, k) + ": alpha(x,y,z) + alpha(x,z,y) = " + to_string(s);
        }
        S rhs(0);
        for (int p = 0; p < kDim; ++p)
          if (!is_zero(P[j][p])) rhs -= P[j][p] * half[i][p][k];
        if (j == X) rhs += al[i][X][k];
        if (k == X) rhs += al[i][j][X];
        if (csym.passed && !near(al[i][j][k], rhs, scale)) {
          csym.passed = false;
          csym.witness = where(i, j, k) + ": " + to_string(al[i][j][k]) + " vs " + to_string(rhs);
        }
      }
  CheckReport report;
  report.items = {anti, csym};
  return report;
}

template <Scalar S>
XiDiagnostics<S> xi_diagnostics(const Connection<S>& conn, const G2Structure<S>& g2, const ACMS<S>& a,
                                const AdaptedBasis<S>& basis) {
  XiDiagnostics<S> d;
  const Vector7<S>& xi = a.xi;
  for (int i = 0; i < kDim; ++i) d.nabla_xi[i] = conn.nabla(basis_vector<S>(i), xi);
  d.nabla_xi_xi = conn.nabla(xi, xi);
  d.div_xi = divergence(conn, xi);

  d.v = zero_vector<S>();
  for (int j = 0; j < kDim - 1; ++j) d.v = d.v + cross(g2, basis[j], conn.nabla(basis[j], xi));
  d.g_xi_v = dot(xi, d.v);

  d.delta_eta = S(0);
  for (int j = 0; j < kDim; ++j) d.delta_eta += dot(xi, conn.nabla(basis[j], basis[j]));

  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      if (!is_zero(d.nabla_xi[i][j])) d.xi_parallel = false;
      const S sym = d.nabla_xi[i][j] + d.nabla_xi[j][i];
      if (d.is_killing && !is_zero(sym)) {
        d.is_killing = false;
        d.killing_witness = "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                            "): g(nabla_x xi, y) + g(nabla_y xi, x) = " + to_string(sym);
      }
    }
  return d;
}

template <Scalar S>
Vector7<S> codifferential_phi(const CovDerivTensor<S>& t) {
  Vector7<S> r = zero_vector<S>();
  for (int x = 0; x < kDim; ++x)
    for (int c = 0; c < kDim; ++c) r[x] -= t.alpha[c][c][x];
  return r;
}

template <Scalar S>
Vector7<S> codifferential_phi_frame(const CovDerivTensor<S>& t) {
  Vector7<S> r = zero_vector<S>();
  for (int x = 0; x < kDim; ++x)
    for (int i = 0; i < kDim; ++i) r[x] -= t.frame[i][i][x];
  return r;
}

template <Scalar S>
Matrix7<S> nabla_phi_endomorphism(const Connection<S>& conn, const G2Structure<S>& g2, const ACMS<S>& a,
                                  const Vector7<S>& x) {
  Matrix7<S> m;
  for (int j = 0; j < kDim; ++j) {
    const Vector7<S> ej = basis_vector<S>(j);
    const Vector7<S> col = conn.nabla(x, a.phi(ej)) - cross(g2, a.xi, conn.nabla(x, ej));
    for (int k = 0; k < kDim; ++k) m[k][j] = col[k];
  }
  return m;
}

template <Scalar S>
Matrix7<S> nabla_xi_phi(const Connection<S>& conn, const G2Structure<S>& g2, const ACMS<S>& a) {
  return nabla_phi_endomorphism(conn, g2, a, a.xi);
}

template <Scalar S>
Matrix7<S> cross_matrix(const G2Structure<S>& g2, const Vector7<S>& y) {
  Matrix7<S> m;
  for (int j = 0; j < kDim; ++j) {
    const Vector7<S> col = cross(g2, y, basis_vector<S>(j));
    for (int k = 0; k < kDim; ++k) m[k][j] = col[k];
  }
  return m;
}

#define G2C_INSTANTIATE_NABLAPHI(S)                                                                         \
  template struct CovDerivTensor<S>;                                                                        \
  template Tensor3<S> change_basis<S>(const Tensor3<S>&, const AdaptedBasis<S>&);                           \
  template Tensor3<S> nabla_phi_frame<S>(const Connection<S>&, const ACMS<S>&);                             \
  template CovDerivTensor<S> nabla_phi_tensor<S>(const Connection<S>&, const ACMS<S>&, const AdaptedBasis<S>&); \
  template CheckReport validate_tensor<S>(const CovDerivTensor<S>&, const ACMS<S>&);                        \
  template XiDiagnostics<S> xi_diagnostics<S>(const Connection<S>&, const G2Structure<S>&, const ACMS<S>&,  \
                                              const AdaptedBasis<S>&);                                      \
  template Vector7<S> codifferential_phi<S>(const CovDerivTensor<S>&);                                      \
  template Vector7<S> codifferential_phi_frame<S>(const CovDerivTensor<S>&);                                \
  template Matrix7<S> nabla_phi_endomorphism<S>(const Connection<S>&, const G2Structure<S>&, const ACMS<S>&, \
                                                const Vector7<S>&);                                         \
  template Matrix7<S> nabla_xi_phi<S>(const Connection<S>&, const G2Structure<S>&, const ACMS<S>&);         \
  template Matrix7<S> cross_matrix<S>(const G2Structure<S>&, const Vector7<S>&);

G2C_INSTANTIATE_NABLAPHI(Rational)
G2C_INSTANTIATE_NABLAPHI(double)

}  // namespace g2c
