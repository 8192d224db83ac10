#pragma once

// Multilinear algebra on the oriented Euclidean space R^7 with orthonormal
// frame e1..e7 and orientation e^{1234567}.
//
// Forms use the determinant convention: (e^i ^ e^j)(e_i, e_j) = 1, so the
// coefficient of e^{i1..ik} (i1 < .. < ik) is the value on (e_i1, .., e_ik).
// Indices are 0-based in code and 1-based in every rendered string.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "g2c/scalar.hpp"

namespace g2c {

inline constexpr int kDim = 7;

template <Scalar S>
using Vector7 = std::array<S, kDim>;

/// Row-major 7x7 matrix; for endomorphisms column j holds the image of e_j.
template <Scalar S>
using Matrix7 = std::array<std::array<S, kDim>, kDim>;

/// Subset of {0..6} encoded as a bitmask; identifies the monomial e^I.
using Mask = std::uint8_t;
inline constexpr int kMaskCount = 1 << kDim;

int mask_degree(Mask m);
/// Sign of the shuffle (I, J) when I and J are disjoint, i.e. e^I ^ e^J = sign e^{I u J}.
int shuffle_sign(Mask i, Mask j);
/// "e^{123}" style label, 1-based.
std::string mask_label(Mask m);

template <Scalar S>
Vector7<S> zero_vector() {
  Vector7<S> v;
  v.fill(S(0));
  return v;
}

template <Scalar S>
Vector7<S> basis_vector(int i) {
  Vector7<S> v = zero_vector<S>();
  v[static_cast<std::size_t>(i)] = S(1);
  return v;
}

template <Scalar S>
S dot(const Vector7<S>& a, const Vector7<S>& b) {
  S s(0);
  for (int i = 0; i < kDim; ++i) s += a[i] * b[i];
  return s;
}

template <Scalar S>
Vector7<S> operator+(const Vector7<S>& a, const Vector7<S>& b) {
  Vector7<S> r;
  for (int i = 0; i < kDim; ++i) r[i] = a[i] + b[i];
  return r;
}

template <Scalar S>
Vector7<S> operator-(const Vector7<S>& a, const Vector7<S>& b) {
  Vector7<S> r;
  for (int i = 0; i < kDim; ++i) r[i] = a[i] - b[i];
  return r;
}

template <Scalar S>
Vector7<S> operator*(const S& s, const Vector7<S>& a) {
  Vector7<S> r;
  for (int i = 0; i < kDim; ++i) r[i] = s * a[i];
  return r;
}

template <Scalar S>
bool is_zero(const Vector7<S>& v, double scale = 1.0) {
  for (const auto& x : v)
    if (!is_zero(x, scale)) return false;
  return true;
}

template <Scalar S>
Matrix7<S> zero_matrix() {
  Matrix7<S> m;
  for (auto& row : m) row.fill(S(0));
  return m;
}

template <Scalar S>
Vector7<S> apply(const Matrix7<S>& m, const Vector7<S>& x) {
  Vector7<S> r = zero_vector<S>();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r[i] += m[i][j] * x[j];
  return r;
}

template <Scalar S>
bool is_zero(const Matrix7<S>& m, double scale = 1.0) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!is_zero(x, scale)) return false;
  return true;
}

/// "2*e1 - e3 + 1/2*e5" (or "0").
template <Scalar S>
std::string format_vector(const Vector7<S>& v, const char* symbol = "e");

/// Alternating k-form with constant coefficients, stored densely by monomial mask.
template <Scalar S>
class KForm {
 public:
  explicit KForm(int degree = 0);

  /// The monomial e^{i1..ik} from 0-based indices (any order; sign applied).
  static KForm monomial(std::initializer_list<int> indices, const S& coeff = S(1));
  static KForm one_form(const Vector7<S>& coeffs);

  int degree() const { return degree_; }

  const S& operator[](Mask m) const { return c_[m]; }
  S& operator[](Mask m) { return c_[m]; }

  /// Value on basis vectors e_{idx[0]}, .., e_{idx[k-1]}: signed coefficient, 0 on repeats.
  S on_basis(std::span<const int> idx) const;

  bool is_zero(double scale = 1.0) const;
  int nonzero_count() const;

  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const S& s);

  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const S& s, KForm a) { return a *= s; }

  /// Exact equality (rational) or within tolerance (float).
  bool equals(const KForm& o, double scale = 1.0) const;
  friend bool operator==(const KForm& a, const KForm& b) { return a.equals(b); }

  /// Σ |coeff|^2 over stored monomials.
  S norm2() const;

  /// "-2*e^{23} - 2*e^{45}" style, `symbol` replaces "e".
  std::string to_string(const char* symbol = "e") const;

 private:
  int degree_;
  std::array<S, kMaskCount> c_;
};

/// a ^ b. Throws std::invalid_argument when deg a + deg b > 7.
template <Scalar S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b);

/// Hodge star for the Euclidean metric and orientation e^{1234567}.
template <Scalar S>
KForm<S> hodge_star(const KForm<S>& a);

/// (i_x a)(y1..y_{k-1}) = a(x, y1..y_{k-1}). Throws std::invalid_argument on 0-forms.
template <Scalar S>
KForm<S> interior_product(const Vector7<S>& x, const KForm<S>& a);

/// Fully antisymmetric evaluation. Throws std::invalid_argument on arity mismatch.
template <Scalar S>
S eval(const KForm<S>& a, std::span<const Vector7<S>> xs);

template <Scalar S>
S eval(const KForm<S>& a, std::initializer_list<Vector7<S>> xs) {
  return eval(a, std::span<const Vector7<S>>(xs.begin(), xs.size()));
}

}  // namespace g2c
