#include <doctest.h>

#include "support.hpp"

using namespace g2c;
using namespace g2c::test;

namespace {

KForm<Q> random_form(RationalSampler& s, int degree) {
  KForm<Q> f(degree);
  for (int m = 0; m < kMaskCount; ++m)
    if (mask_degree(static_cast<Mask>(m)) == degree) f[static_cast<Mask>(m)] = s.next();
  return f;
}

/// Determinant of the k x k matrix M[a][b] = x_a[idx_b], by cofactor expansion.
Q minor_det(const std::vector<V>& xs, const std::vector<int>& idx) {
  const std::size_t k = idx.size();
  if (k == 0) return 1;
  Q s = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<V> rest(xs.begin() + 1, xs.end());
    std::vector<int> sub;
    for (std::size_t d = 0; d < k; ++d)
      if (d != c) sub.push_back(idx[d]);
    const Q term = xs[0][idx[c]] * minor_det(rest, sub);
    s += (c % 2 == 0) ? term : Q(-term);
  }
  return s;
}

}  // namespace

TEST_SUITE("exterior") {
  TEST_CASE("monomials are signed by their index order") {
    CHECK(KForm<Q>::monomial({1, 0}) == q(-1) * KForm<Q>::monomial({0, 1}));
    CHECK(KForm<Q>::monomial({0, 0}).is_zero());
    const int idx[] = {2, 1, 0};
    CHECK(KForm<Q>::monomial({0, 1, 2}, q(5)).on_basis(idx) == q(-5));
    CHECK(mask_degree(0b1010101) == 4);
    CHECK(shuffle_sign(0b10, 0b01) == -1);
    CHECK(mask_label(0b1000101) == "{137}");
  }

  TEST_CASE("wedge of coframe elements") {
    const auto e1 = KForm<Q>::monomial({0});
    const auto e2 = KForm<Q>::monomial({1});
    CHECK(wedge(e1, e2) == KForm<Q>::monomial({0, 1}));
    CHECK(wedge(e2, e1) == KForm<Q>::monomial({1, 0}));
    CHECK(wedge(e1, e1).is_zero());
    CHECK_THROWS_AS(wedge(KForm<Q>(4), KForm<Q>(4)), std::invalid_argument);
  }

  TEST_CASE("wedge is graded commutative and associative on random forms") {
    RationalSampler s(11);
    for (int trial = 0; trial < 50; ++trial) {
      const int p = trial % 4;
      const int r = (trial / 4) % (kDim - p + 1);
      const auto a = random_form(s, p);
      const auto b = random_form(s, r);
      const int sign = (p * r) % 2 == 0 ? 1 : -1;
      CHECK(wedge(a, b) == q(sign) * wedge(b, a));
      if (p + r + 1 <= kDim) {
        const auto c = random_form(s, 1);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
      }
    }
  }

  TEST_CASE("star star is the identity in every degree") {
    RationalSampler s(3);
    for (int k = 0; k <= kDim; ++k) {
      const auto a = random_form(s, k);
      CHECK(hodge_star(hodge_star(a)) == a);
    }
    KForm<double> f(3);
    f[0b0000111] = 0.25;
    f[0b1110000] = -3.0;
    CHECK(hodge_star(hodge_star(f)) == f);
  }

  TEST_CASE("star realises the inner product: a ^ star b = <a,b> vol") {
    RationalSampler s(5);
    for (int k = 0; k <= kDim; ++k) {
      const auto a = random_form(s, k);
      const auto b = random_form(s, k);
      Q inner = 0;
      for (int m = 0; m < kMaskCount; ++m) inner += a[static_cast<Mask>(m)] * b[static_cast<Mask>(m)];
      const auto top = wedge(a, hodge_star(b));
      CHECK(top[kMaskCount - 1] == inner);
    }
    CHECK(hodge_star(KForm<Q>::monomial({0, 1, 2})) == KForm<Q>::monomial({3, 4, 5, 6}));
  }

  TEST_CASE("evaluation is the determinant of the coordinate minors") {
    RationalSampler s(9);
    for (int trial = 0; trial < 20; ++trial) {
      const int k = 1 + trial % 4;
      const auto f = random_form(s, k);
      std::vector<V> xs;
      for (int a = 0; a < k; ++a) xs.push_back(s.vector());
      Q expected = 0;
      for (int m = 0; m < kMaskCount; ++m) {
        if (mask_degree(static_cast<Mask>(m)) != k) continue;
        std::vector<int> idx;
        for (int i = 0; i < kDim; ++i)
          if (m >> i & 1) idx.push_back(i);
        expected += f[static_cast<Mask>(m)] * minor_det(xs, idx);
      }
      CHECK(eval(f, std::span<const V>(xs)) == expected);
    }
    CHECK_THROWS_AS(eval(KForm<Q>(2), {e(1)}), std::invalid_argument);
  }

  TEST_CASE("interior product") {
    CHECK(interior_product(e(1), KForm<Q>::monomial({0, 1, 2})) == KForm<Q>::monomial({1, 2}));
    CHECK(interior_product(e(2), KForm<Q>::monomial({0, 1, 2})) == KForm<Q>::monomial({2, 0}));
    RationalSampler s(4);
    const auto f = random_form(s, 3);
    const V x = s.vector();
    CHECK(interior_product(x, interior_product(x, f)).is_zero());
    CHECK_THROWS_AS(interior_product(x, KForm<Q>(0)), std::invalid_argument);
  }

  TEST_CASE("rendering") {
    KForm<Q> f(2);
    f[0b0000110] = q(-2);
    f[0b0011000] = q(1, 2);
    CHECK(f.to_string("eta") == "-2*eta^{23} + 1/2*eta^{45}");
    CHECK(KForm<Q>(3).to_string() == "0");
    CHECK(format_vector(vec({2, 0, -1})) == "2*e1 - e3");
    CHECK(format_vector(zero_vector<Q>()) == "0");
  }
}
