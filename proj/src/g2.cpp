#include "g2c/g2.hpp"

#include <sstream>
#include <stdexcept>

#include "g2c/random.hpp"

namespace g2c {

template <Scalar S>
G2Structure<S>::G2Structure(KForm<S> phi) : phi_(std::move(phi)) {
  if (phi_.degree() != 3) throw ValidationError("G2 structure needs a 3-form, got degree " + std::to_string(phi_.degree()));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const int idx[3] = {i, j, k};
        table_[i][j][k] = phi_.on_basis(idx);
      }
}

template <Scalar S>
G2Structure<S> standard_phi() {
  const S one(1);
  const S minus(-1);
  KForm<S> phi(3);
  phi += KForm<S>::monomial({0, 1, 2}, one);
  phi += KForm<S>::monomial({0, 3, 4}, one);
  phi += KForm<S>::monomial({0, 5, 6}, one);
  phi += KForm<S>::monomial({1, 3, 5}, one);
  phi += KForm<S>::monomial({1, 4, 6}, minus);
  phi += KForm<S>::monomial({2, 3, 6}, minus);
  phi += KForm<S>::monomial({2, 4, 5}, minus);
  return G2Structure<S>(std::move(phi));
}

template <Scalar S>
Vector7<S> cross(const G2Structure<S>& g2, const Vector7<S>& x, const Vector7<S>& y) {
  Vector7<S> r = zero_vector<S>();
  const auto& t = g2.table();
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < kDim; ++j) {
      if (i == j || is_zero(y[j])) continue;
      const S xy = x[i] * y[j];
      for (int k = 0; k < kDim; ++k)
        if (!is_zero(t[i][j][k])) r[k] += xy * t[i][j][k];
    }
  }
  return r;
}

namespace {

template <Scalar S>
std::string pair_label(const Vector7<S>& x, const Vector7<S>& y) {
  return "(" + format_vector(x) + ", " + format_vector(y) + ")";
}

template <Scalar S>
struct AxiomRun {
  const G2Structure<S>& g2;
  CheckItem anti{"antisymmetry", true, {}};
  CheckItem ortho{"orthogonality", true, {}};
  CheckItem norm{"norm identity", true, {}};
  CheckItem dbl{"double cross", true, {}};

  void fail(CheckItem& item, std::string witness) {
    if (!item.passed) return;
    item.passed = false;
    item.witness = std::move(witness);
  }

  void check(const Vector7<S>& x, const Vector7<S>& y) {
    const Vector7<S> xy = cross(g2, x, y);
    const Vector7<S> yx = cross(g2, y, x);
    const double scale = ScalarTraits<S>::to_double(dot(x, x) * dot(y, y)) + 1.0;
    if (!is_zero(xy + yx, scale)) fail(anti, pair_label(x, y) + ": x*y + y*x = " + format_vector(Vector7<S>(xy + yx)));
    const S gx = dot(xy, x);
    const S gy = dot(xy, y);
    if (!is_zero(gx, scale) || !is_zero(gy, scale))
      fail(ortho, pair_label(x, y) + ": g(x*y,x) = " + to_string(gx) + ", g(x*y,y) = " + to_string(gy));
    const S lhs = dot(xy, xy);
    const S xyd = dot(x, y);
    const S rhs = dot(x, x) * dot(y, y) - xyd * xyd;
    if (!near(lhs, rhs, scale))
      fail(norm, pair_label(x, y) + ": |x*y|^2 = " + to_string(lhs) + ", expected " + to_string(rhs));
    const S xx = dot(x, x);
    Vector7<S> d = cross(g2, x, xy);
    for (int k = 0; k < kDim; ++k) d[k] += xx * y[k] - xyd * x[k];
    if (!is_zero(d, scale)) fail(dbl, pair_label(x, y) + ": x*(x*y) + |x|^2 y - g(x,y) x = " + format_vector(d));
  }
};

}  // namespace

template <Scalar S>
CheckReport validate_cross_axioms(const G2Structure<S>& g2, int random_trials, std::uint64_t seed) {
  AxiomRun<S> run{g2};
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) run.check(basis_vector<S>(i), basis_vector<S>(j));
  RationalSampler sampler(seed);
  for (int t = 0; t < random_trials; ++t) {
    const auto x = convert<S>(sampler.vector());
    const auto y = convert<S>(sampler.vector());
    run.check(x, y);
  }
  CheckReport report;
  report.items = {run.anti, run.ortho, run.norm, run.dbl};
  return report;
}

template <Scalar S>
std::vector<CrossEntry<S>> cross_table(const G2Structure<S>& g2) {
  std::vector<CrossEntry<S>> out;
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) out.push_back({i, j, g2.table()[i][j]});
  return out;
}

template <Scalar S>
std::string format_cross_table(const G2Structure<S>& g2) {
  std::ostringstream os;
  for (const auto& e : cross_table(g2))
    os << "e" << e.i + 1 << " x e" << e.j + 1 << " = " << format_vector(e.value) << "\n";
  return os.str();
}

#define G2C_INSTANTIATE_G2(S)                                                                 \
  template class G2Structure<S>;                                                              \
  template G2Structure<S> standard_phi<S>();                                                  \
  template Vector7<S> cross<S>(const G2Structure<S>&, const Vector7<S>&, const Vector7<S>&);  \
  template CheckReport validate_cross_axioms<S>(const G2Structure<S>&, int, std::uint64_t);   \
  template std::vector<CrossEntry<S>> cross_table<S>(const G2Structure<S>&);                  \
  template std::string format_cross_table<S>(const G2Structure<S>&);

G2C_INSTANTIATE_G2(Rational)
G2C_INSTANTIATE_G2(double)

}  // namespace g2c
