#include "g2c/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace g2c {

int mask_degree(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

int shuffle_sign(Mask i, Mask j) {
  // Count pairs (p in I, q in J) with p > q.
  int inversions = 0;
  for (int q = 0; q < kDim; ++q) {
    if (!(j >> q & 1)) continue;
    inversions += std::popcount(static_cast<unsigned>(i >> (q + 1)));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::string mask_label(Mask m) {
  std::string s = "{";
  for (int i = 0; i < kDim; ++i)
    if (m >> i & 1) s += static_cast<char>('1' + i);
  return s + "}";
}

namespace {

template <Scalar S>
void append_term(std::string& out, const S& c, const std::string& label) {
  std::string mag;
  bool negative;
  if constexpr (ScalarTraits<S>::exact) {
    negative = sgn(c) < 0;
    Rational a = abs(c);
    if (a != 1) mag = to_string(a) + "*";
  } else {
    negative = c < 0;
    double a = negative ? -c : c;
    if (a != 1.0) mag = to_string(a) + "*";
  }
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  out += mag + label;
}

}  // namespace

template <Scalar S>
std::string format_vector(const Vector7<S>& v, const char* symbol) {
  std::string out;
  for (int i = 0; i < kDim; ++i)
    if (!is_zero(v[i])) append_term(out, v[i], std::string(symbol) + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

template <Scalar S>
KForm<S>::KForm(int degree) : degree_(degree) {
  if (degree < 0 || degree > kDim) throw std::invalid_argument("form degree out of range: " + std::to_string(degree));
  c_.fill(S(0));
}

template <Scalar S>
KForm<S> KForm<S>::monomial(std::initializer_list<int> indices, const S& coeff) {
  KForm f(static_cast<int>(indices.size()));
  std::array<int, kDim> idx{};
  int k = 0;
  for (int i : indices) {
    if (i < 0 || i >= kDim) throw std::invalid_argument("frame index out of range");
    idx[k++] = i;
  }
  int sign = 1;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      if (idx[a] == idx[b]) return f;
      if (idx[a] > idx[b]) sign = -sign;
    }
  Mask m = 0;
  for (int a = 0; a < k; ++a) m |= static_cast<Mask>(1u << idx[a]);
  f.c_[m] = sign > 0 ? coeff : S(-coeff);
  return f;
}

template <Scalar S>
KForm<S> KForm<S>::one_form(const Vector7<S>& coeffs) {
  KForm f(1);
  for (int i = 0; i < kDim; ++i) f.c_[1u << i] = coeffs[i];
  return f;
}

template <Scalar S>
S KForm<S>::on_basis(std::span<const int> idx) const {
  const int k = static_cast<int>(idx.size());
  if (k != degree_) throw std::invalid_argument("wrong number of arguments for form evaluation");
  int sign = 1;
  Mask m = 0;
  for (int a = 0; a < k; ++a) {
    const Mask bit = static_cast<Mask>(1u << idx[a]);
    if (m & bit) return S(0);
    m |= bit;
    for (int b = a + 1; b < k; ++b)
      if (idx[a] > idx[b]) sign = -sign;
  }
  return sign > 0 ? c_[m] : S(-c_[m]);
}

template <Scalar S>
bool KForm<S>::is_zero(double scale) const {
  for (const auto& x : c_)
    if (!g2c::is_zero(x, scale)) return false;
  return true;
}

template <Scalar S>
int KForm<S>::nonzero_count() const {
  int n = 0;
  for (const auto& x : c_)
    if (!g2c::is_zero(x)) ++n;
  return n;
}

template <Scalar S>
KForm<S>& KForm<S>::operator+=(const KForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("adding forms of different degree");
  for (int m = 0; m < kMaskCount; ++m) c_[m] += o.c_[m];
  return *this;
}

template <Scalar S>
KForm<S>& KForm<S>::operator-=(const KForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("subtracting forms of different degree");
  for (int m = 0; m < kMaskCount; ++m) c_[m] -= o.c_[m];
  return *this;
}

template <Scalar S>
KForm<S>& KForm<S>::operator*=(const S& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

template <Scalar S>
bool KForm<S>::equals(const KForm& o, double scale) const {
  if (o.degree_ != degree_) return false;
  for (int m = 0; m < kMaskCount; ++m)
    if (!near(c_[m], o.c_[m], scale)) return false;
  return true;
}

template <Scalar S>
S KForm<S>::norm2() const {
  S s(0);
  for (const auto& x : c_) s += x * x;
  return s;
}

template <Scalar S>
std::string KForm<S>::to_string(const char* symbol) const {
  if (degree_ == 0) return g2c::is_zero(c_[0]) ? "0" : g2c::to_string(c_[0]);
  // Monomials of equal degree sort lexicographically by their labels.
  std::vector<std::pair<std::string, Mask>> terms;
  for (int m = 0; m < kMaskCount; ++m)
    if (!g2c::is_zero(c_[m])) terms.emplace_back(mask_label(static_cast<Mask>(m)), static_cast<Mask>(m));
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& [label, m] : terms) append_term(out, c_[m], std::string(symbol) + "^" + label);
  return out.empty() ? "0" : out;
}

template <Scalar S>
KForm<S> wedge(const KForm<S>& a, const KForm<S>& b) {
  const int deg = a.degree() + b.degree();
  if (deg > kDim)
    throw std::invalid_argument("wedge degree overflow: " + std::to_string(a.degree()) + " + " +
                                std::to_string(b.degree()) + " > 7");
  KForm<S> r(deg);
  for (int i = 0; i < kMaskCount; ++i) {
    if (mask_degree(static_cast<Mask>(i)) != a.degree() || is_zero(a[static_cast<Mask>(i)])) continue;
    for (int j = 0; j < kMaskCount; ++j) {
      if (i & j) continue;
      if (mask_degree(static_cast<Mask>(j)) != b.degree() || is_zero(b[static_cast<Mask>(j)])) continue;
      const S prod = a[static_cast<Mask>(i)] * b[static_cast<Mask>(j)];
      const Mask u = static_cast<Mask>(i | j);
      if (shuffle_sign(static_cast<Mask>(i), static_cast<Mask>(j)) > 0)
        r[u] += prod;
      else
        r[u] -= prod;
    }
  }
  return r;
}

template <Scalar S>
KForm<S> hodge_star(const KForm<S>& a) {
  KForm<S> r(kDim - a.degree());
  constexpr Mask full = kMaskCount - 1;
  for (int i = 0; i < kMaskCount; ++i) {
    const Mask m = static_cast<Mask>(i);
    if (mask_degree(m) != a.degree()) continue;
    const Mask c = static_cast<Mask>(full & ~m);
    r[c] = shuffle_sign(m, c) > 0 ? a[m] : S(-a[m]);
  }
  return r;
}

template <Scalar S>
KForm<S> interior_product(const Vector7<S>& x, const KForm<S>& a) {
  if (a.degree() == 0) throw std::invalid_argument("interior product of a 0-form");
  KForm<S> r(a.degree() - 1);
  for (int i = 0; i < kMaskCount; ++i) {
    const Mask m = static_cast<Mask>(i);
    if (mask_degree(m) != a.degree() || is_zero(a[m])) continue;
    int position = 0;
    for (int p = 0; p < kDim; ++p) {
      if (!(m >> p & 1)) continue;
      if (!is_zero(x[p])) {
        const S term = x[p] * a[m];
        const Mask rest = static_cast<Mask>(m & ~(1u << p));
        if (position % 2 == 0)
          r[rest] += term;
        else
          r[rest] -= term;
      }
      ++position;
    }
  }
  return r;
}

template <Scalar S>
S eval(const KForm<S>& a, std::span<const Vector7<S>> xs) {
  if (static_cast<int>(xs.size()) != a.degree())
    throw std::invalid_argument("form of degree " + std::to_string(a.degree()) + " evaluated on " +
                                std::to_string(xs.size()) + " vectors");
  KForm<S> cur = a;
  for (const auto& x : xs) cur = interior_product(x, cur);
  return cur[0];
}

#define G2C_INSTANTIATE_EXTERIOR(S)                                                  \
  template class KForm<S>;                                                           \
  template std::string format_vector<S>(const Vector7<S>&, const char*);            \
  template KForm<S> wedge<S>(const KForm<S>&, const KForm<S>&);                      \
  template KForm<S> hodge_star<S>(const KForm<S>&);                                  \
  template KForm<S> interior_product<S>(const Vector7<S>&, const KForm<S>&);         \
  template S eval<S>(const KForm<S>&, std::span<const Vector7<S>>);

G2C_INSTANTIATE_EXTERIOR(Rational)
G2C_INSTANTIATE_EXTERIOR(double)

}  // namespace g2c
