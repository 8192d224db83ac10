#include "g2c/invariants.hpp"

namespace g2c {

template <Scalar S>
Vector7<S> contraction_c12(const CovDerivTensor<S>& t) {
  Vector7<S> c = zero_vector<S>();
  for (int z = 0; z < kDim; ++z)
    for (int a = 0; a < kDim - 1; ++a) c[z] += t.alpha[a][a][z];
  return c;
}

template <Scalar S>
S alpha_norm2(const CovDerivTensor<S>& t) {
  S n(0);
  for (const auto& p : t.alpha)
    for (const auto& q : p)
      for (const auto& x : q) n += x * x;
  return n;
}

template <Scalar S>
InvariantVector<S> quadratic_invariants(const CovDerivTensor<S>& t, const ACMS<S>& acms) {
  constexpr int N = kDim - 1;  // f1..f6
  constexpr int X = kDim - 1;  // xi
  const auto& al = t.alpha;
  const Matrix7<S> P = phi_in_basis(acms, t.basis);

  // pp[a][b][c] = alpha(phi b_a, phi b_b, b_c), contracted one slot at a time.
  Tensor3<S> half = zero_tensor<S>();
  for (int p = 0; p < kDim; ++p)
    for (int b = 0; b < kDim; ++b)
      for (int q = 0; q < kDim; ++q) {
        if (is_zero(P[b][q])) continue;
        for (int c = 0; c < kDim; ++c) half[p][b][c] += P[b][q] * al[p][q][c];
      }
  Tensor3<S> pp = zero_tensor<S>();
  for (int a = 0; a < kDim; ++a)
    for (int p = 0; p < kDim; ++p) {
      if (is_zero(P[a][p])) continue;
      for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) pp[a][b][c] += P[a][p] * half[p][b][c];
    }
  // a_phi_xi[a][b] = alpha(b_a, phi b_b, xi)
  Matrix7<S> a_phi_xi = zero_matrix<S>();
  // phi_xi[b][c] = alpha(phi b_b, xi, b_c)
  Matrix7<S> phi_xi = zero_matrix<S>();
  // tr_phi[c] = sum_a alpha(f_a, f_a, phi b_c)
  Vector7<S> tr_phi = zero_vector<S>();
  const Vector7<S> c12 = contraction_c12(t);
  for (int a = 0; a < kDim; ++a)
    for (int b = 0; b < kDim; ++b)
      for (int q = 0; q < kDim; ++q) {
        if (is_zero(P[b][q])) continue;
        a_phi_xi[a][b] += P[b][q] * al[a][q][X];
        phi_xi[b][a] += P[b][q] * al[q][X][a];
      }
  for (int c = 0; c < kDim; ++c)
    for (int q = 0; q < kDim; ++q)
      if (!is_zero(P[c][q])) tr_phi[c] += P[c][q] * c12[q];

  std::array<S, 18> v;
  v.fill(S(0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        v[0] += al[i][j][k] * al[i][j][k];
        v[1] += al[i][j][k] * al[j][i][k];
        v[2] += al[i][j][k] * pp[i][j][k];
      }
  for (int k = 0; k < N; ++k) v[3] += c12[k] * c12[k];
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      v[4] += al[X][j][k] * al[X][j][k];
      v[5] += al[j][X][k] * al[j][X][k];
      v[6] += al[X][j][k] * al[j][X][k];
      v[7] += al[j][k][X] * al[k][j][X];
      v[8] += al[j][k][X] * pp[j][k][X];
      v[10] += al[j][k][X] * a_phi_xi[k][j];
      v[11] += al[j][k][X] * pp[k][j][X];
      v[12] += al[X][j][k] * phi_xi[j][k];
    }
  v[9] = c12[X] * c12[X];
  S trace_phi_xi(0);
  for (int i = 0; i < N; ++i) trace_phi_xi += a_phi_xi[i][i];
  v[13] = trace_phi_xi * trace_phi_xi;
  v[14] = trace_phi_xi * c12[X];
  for (int k = 0; k < N; ++k) {
    v[15] += al[X][X][k] * al[X][X][k];
    v[16] += c12[k] * al[X][X][k];
    v[17] += tr_phi[k] * al[X][X][k];
  }

  InvariantVector<S> out;
  out.i = v;
  out.norm2 = alpha_norm2(t);
  out.c12 = c12;
  out.c12_norm2 = v[3];
  return out;
}

#define G2C_INSTANTIATE_INVARIANTS(S)                                                          \
  template InvariantVector<S> quadratic_invariants<S>(const CovDerivTensor<S>&, const ACMS<S>&); \
  template Vector7<S> contraction_c12<S>(const CovDerivTensor<S>&);                            \
  template S alpha_norm2<S>(const CovDerivTensor<S>&);

G2C_INSTANTIATE_INVARIANTS(Rational)
G2C_INSTANTIATE_INVARIANTS(double)

}  // namespace g2c
