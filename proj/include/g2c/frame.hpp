#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2c/check_report.hpp"
#include "g2c/exterior.hpp"
#include "g2c/g2.hpp"

namespace g2c {

/// t[i][j][k] for i, j, k in 0..6.
template <Scalar S>
using Tensor3 = std::array<std::array<Vector7<S>, kDim>, kDim>;

template <Scalar S>
Tensor3<S> zero_tensor() {
  Tensor3<S> t;
  for (auto& a : t)
    for (auto& b : a) b.fill(S(0));
  return t;
}

/// [e_i, e_j] = sum_k c[i][j][k] e_k on a left-invariant orthonormal frame.
template <Scalar S>
struct StructureConstants {
  Tensor3<S> c = zero_tensor<S>();

  struct Bracket {
    int i;  // 0-based
    int j;
    int k;
    S value;
  };

  /// Each entry sets [e_i, e_j] += value e_k and the antisymmetric partner.
  static StructureConstants from_brackets(const std::vector<Bracket>& brackets);

  Vector7<S> bracket(const Vector7<S>& x, const Vector7<S>& y) const;
};

/// gamma[i][j][k] = g(nabla_{e_i} e_j, e_k).
template <Scalar S>
struct Connection {
  Tensor3<S> gamma = zero_tensor<S>();

  /// nabla_x w for constant-coefficient fields x and w.
  Vector7<S> nabla(const Vector7<S>& x, const Vector7<S>& w) const;
};

/// Antisymmetry and Jacobi identity; the witness names the first failing triple.
template <Scalar S>
CheckReport validate_structure(const StructureConstants<S>& c);

/// Koszul formula: 2 gamma[i][j][k] = c[i][j][k] - c[j][k][i] + c[k][i][j].
template <Scalar S>
Connection<S> levi_civita(const StructureConstants<S>& c);

/// Metric compatibility and vanishing torsion of a connection for the frame.
template <Scalar S>
CheckReport validate_connection(const StructureConstants<S>& c, const Connection<S>& conn);

/// Chevalley-Eilenberg differential, no 1/2: d eta(x, y) = -eta([x, y]).
template <Scalar S>
KForm<S> ce_differential(const StructureConstants<S>& c, const KForm<S>& w);

/// (nabla_{e_i} w)(y_1..y_k) = -sum_m w(y_1, .., nabla_{e_i} y_m, .., y_k).
template <Scalar S>
KForm<S> nabla_form(const Connection<S>& conn, const KForm<S>& w, int i);

/// Full antisymmetrisation of nabla w over k+1 slots; equals dw for torsion-free nabla.
template <Scalar S>
KForm<S> antisymmetrized_nabla(const Connection<S>& conn, const KForm<S>& w);

/// sum_i g(nabla_{e_i} x, e_i).
template <Scalar S>
S divergence(const Connection<S>& conn, const Vector7<S>& x);

template <Scalar S>
struct G2ClassProbe {
  bool parallel = false;
  /// k with d phi = k * (star phi), when such a constant exists.
  std::optional<S> nearly_parallel;
  /// Most common ratio d phi / star phi and how many of the nonzero star phi
  /// components share it; meaningful even when no exact k exists.
  S candidate_k{0};
  int matching_components = 0;
  int star_components = 0;
  KForm<S> dphi{4};
  KForm<S> star_phi{4};
  /// Monomials on which d phi and star phi disagree with the ratio of the rest.
  std::vector<std::string> mismatches;
};

template <Scalar S>
G2ClassProbe<S> g2_class_probe(const StructureConstants<S>& c, const Connection<S>& conn, const G2Structure<S>& g2);

/// "nabla_e1 e2 = e3" lines for every nonzero nabla_{e_i} e_j.
template <Scalar S>
std::string format_connection(const Connection<S>& conn);

}  // namespace g2c
