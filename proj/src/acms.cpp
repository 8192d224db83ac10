#include "g2c/acms.hpp"

#include <cmath>

namespace g2c {

namespace {

std::string e(int i) { return "e" + std::to_string(i + 1); }

void fail(CheckItem& item, std::string witness) {
  if (!item.passed) return;
  item.passed = false;
  item.witness = std::move(witness);
}

}  // namespace

template <Scalar S>
ACMS<S> induce_acms(const G2Structure<S>& g2, const Vector7<S>& xi) {
  const S n2 = dot(xi, xi);
  if (!near(n2, S(1))) throw ValidationError("xi is not a unit vector: g(xi,xi) = " + to_string(n2));
  ACMS<S> a;
  a.xi = xi;
  a.eta = xi;
  a.phi_endo = zero_matrix<S>();
  for (int j = 0; j < kDim; ++j) {
    const Vector7<S> col = cross(g2, xi, basis_vector<S>(j));
    for (int k = 0; k < kDim; ++k) a.phi_endo[k][j] = col[k];
  }
  for (int x = 0; x < kDim; ++x)
    for (int y = x + 1; y < kDim; ++y) a.Phi[static_cast<Mask>((1u << x) | (1u << y))] = a.phi_endo[x][y];
  return a;
}

template <Scalar S>
Vector7<S> AdaptedBasis<S>::coords(const Vector7<S>& x) const {
  Vector7<S> r;
  for (int a = 0; a < kDim; ++a) r[a] = dot(vectors[a], x);
  return r;
}

template <Scalar S>
AdaptedBasis<S> adapted_basis(const Vector7<S>& xi) {
  auto magnitude = [](const S& x) -> S {
    if constexpr (ScalarTraits<S>::exact)
      return abs(x);
    else
      return std::abs(x);
  };
  int m = 0;
  for (int i = 1; i < kDim; ++i)
    if (magnitude(xi[i]) > magnitude(xi[m])) m = i;
  const bool positive = xi[m] >= S(0);
  Vector7<S> w = xi;
  w[m] -= positive ? S(1) : S(-1);
  const S ww = dot(w, w);

  AdaptedBasis<S> b;
  int out = 0;
  for (int i = 0; i < kDim; ++i) {
    if (i == m) continue;
    Vector7<S> col = basis_vector<S>(i);
    if (!is_zero(ww)) {
      const S f = S(2) * w[i] / ww;
      for (int k = 0; k < kDim; ++k) col[k] -= f * w[k];
    }
    b.vectors[out++] = col;
  }
  b.vectors[kDim - 1] = xi;
  return b;
}

template <Scalar S>
Matrix7<S> phi_in_basis(const ACMS<S>& a, const AdaptedBasis<S>& b) {
  Matrix7<S> p;
  for (int r = 0; r < kDim; ++r) {
    const Vector7<S> image = a.phi(b[r]);
    for (int c = 0; c < kDim; ++c) p[r][c] = dot(image, b[c]);
  }
  return p;
}

template <Scalar S>
AdaptedBasis<S> rotate_first_pair(const AdaptedBasis<S>& b, const S& c, const S& s) {
  if (!near(S(c * c + s * s), S(1))) throw std::invalid_argument("rotation coefficients are not on the unit circle");
  AdaptedBasis<S> r = b;
  for (int k = 0; k < kDim; ++k) {
    r.vectors[0][k] = c * b.vectors[0][k] + s * b.vectors[1][k];
    r.vectors[1][k] = c * b.vectors[1][k] - s * b.vectors[0][k];
  }
  return r;
}

Vector7<Rational> rational_unit_vector(const std::array<Rational, 6>& u) {
  Rational n2 = 0;
  for (const auto& x : u) n2 += x * x;
  const Rational denom = 1 + n2;
  Vector7<Rational> v;
  for (int i = 0; i < 6; ++i) v[i] = 2 * u[i] / denom;
  v[6] = (1 - n2) / denom;
  return v;
}

template <Scalar S>
CheckReport validate_acms(const ACMS<S>& a) {
  CheckItem unit{"g(xi,xi) = 1", true, {}};
  CheckItem eta_xi{"eta(xi) = 1", true, {}};
  CheckItem phi_xi{"phi(xi) = 0", true, {}};
  CheckItem eta_phi{"eta o phi = 0", true, {}};
  CheckItem square{"phi^2 = -I + eta (x) xi", true, {}};
  CheckItem metric{"g(phi x, phi y) = g(x,y) - eta(x) eta(y)", true, {}};
  CheckItem skew{"Phi antisymmetric", true, {}};
  CheckItem fund{"Phi(x,y) = g(x, phi y)", true, {}};

  const S n2 = dot(a.xi, a.xi);
  if (!near(n2, S(1))) fail(unit, "g(xi,xi) = " + to_string(n2));
  const S ex = dot(a.eta, a.xi);
  if (!near(ex, S(1))) fail(eta_xi, "eta(xi) = " + to_string(ex));
  const Vector7<S> pxi = a.phi(a.xi);
  if (!is_zero(pxi)) fail(phi_xi, "phi(xi) = " + format_vector(pxi));

  std::array<Vector7<S>, kDim> pe;
  for (int j = 0; j < kDim; ++j) pe[j] = a.phi(basis_vector<S>(j));

  for (int j = 0; j < kDim; ++j) {
    const S ep = dot(a.eta, pe[j]);
    if (!is_zero(ep)) fail(eta_phi, "eta(phi " + e(j) + ") = " + to_string(ep));
    Vector7<S> r = a.phi(pe[j]);
    r[j] += S(1);
    for (int k = 0; k < kDim; ++k) r[k] -= a.eta[j] * a.xi[k];
    if (!is_zero(r)) fail(square, "at " + e(j) + ": phi^2 x + x - eta(x) xi = " + format_vector(r));
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const S lhs = dot(pe[i], pe[j]);
      S rhs = (i == j ? S(1) : S(0)) - a.eta[i] * a.eta[j];
      if (!near(lhs, rhs))
        fail(metric, "(" + e(i) + "," + e(j) + "): " + to_string(lhs) + " vs " + to_string(rhs));
      const S gij = pe[j][i];  // g(e_i, phi e_j)
      const S gji = pe[i][j];
      if (!is_zero(S(gij + gji))) fail(skew, "(" + e(i) + "," + e(j) + "): g(x,phi y) + g(y,phi x) = " + to_string(S(gij + gji)));
      const int idx[2] = {i, j};
      const S phi_ij = a.Phi.on_basis(idx);
      if (!near(phi_ij, gij))
        fail(fund, "(" + e(i) + "," + e(j) + "): Phi = " + to_string(phi_ij) + ", g(x,phi y) = " + to_string(gij));
    }

  CheckReport report;
  report.items = {unit, eta_xi, phi_xi, eta_phi, square, metric, skew, fund};
  return report;
}

template <Scalar S>
CheckReport validate_adapted_basis(const AdaptedBasis<S>& b, const Vector7<S>& xi) {
  CheckItem ortho{"orthonormal", true, {}};
  CheckItem last{"last vector is xi", true, {}};
  for (int a = 0; a < kDim; ++a)
    for (int c = 0; c < kDim; ++c) {
      const S g = dot(b[a], b[c]);
      if (!near(g, a == c ? S(1) : S(0)))
        fail(ortho, "g(b" + std::to_string(a + 1) + ",b" + std::to_string(c + 1) + ") = " + to_string(g));
    }
  if (!is_zero(Vector7<S>(b.xi() - xi))) fail(last, "b7 = " + format_vector(b.xi()));
  CheckReport report;
  report.items = {ortho, last};
  return report;
}

#define G2C_INSTANTIATE_ACMS(S)                                                              \
  template ACMS<S> induce_acms<S>(const G2Structure<S>&, const Vector7<S>&);                 \
  template struct AdaptedBasis<S>;                                                           \
  template AdaptedBasis<S> adapted_basis<S>(const Vector7<S>&);                              \
  template Matrix7<S> phi_in_basis<S>(const ACMS<S>&, const AdaptedBasis<S>&);                \
  template AdaptedBasis<S> rotate_first_pair<S>(const AdaptedBasis<S>&, const S&, const S&); \
  template CheckReport validate_acms<S>(const ACMS<S>&);                                     \
  template CheckReport validate_adapted_basis<S>(const AdaptedBasis<S>&, const Vector7<S>&);

G2C_INSTANTIATE_ACMS(Rational)
G2C_INSTANTIATE_ACMS(double)

}  // namespace g2c
