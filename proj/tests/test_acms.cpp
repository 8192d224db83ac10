#include <doctest.h>

#include "support.hpp"

using namespace g2c;
using namespace g2c::test;

TEST_SUITE("acms") {
  TEST_CASE("structure induced by xi = e1 on the Example-2 form") {
    const auto g2 = builtin_example("sasakian3").g2<Q>();
    const auto a = induce_acms(g2, e(1));
    CHECK(a.phi(e(2)) == e(3));
    CHECK(a.phi(e(4)) == q(-1) * e(5));
    CHECK(is_zero(a.phi(e(1))));
    CHECK(a.eta == e(1));
    CHECK(a.Phi.on_basis(std::array<int, 2>{1, 2}) == dot(e(2), a.phi(e(3))));
    CHECK(validate_acms(a).ok());
  }

  TEST_CASE("axioms hold for random rational unit fields") {
    const auto g2 = builtin_example("sasakian3").g2<Q>();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const V xi = random_unit(seed);
      CHECK(dot(xi, xi) == 1);
      const CheckReport r = validate_acms(induce_acms(g2, xi));
      CHECK(r.ok());
      CHECK(r.items.size() == 8);
    }
  }

  TEST_CASE("non-unit xi is rejected with its squared norm") {
    try {
      induce_acms(standard_phi<Q>(), q(2) * e(1));
      FAIL("expected ValidationError");
    } catch (const ValidationError& err) {
      CHECK(std::string(err.what()).find("g(xi,xi) = 4") != std::string::npos);
    }
  }

  TEST_CASE("a broken structure is caught") {
    auto a = induce_acms(standard_phi<Q>(), e(7));
    a.eta = e(1);
    const CheckReport r = validate_acms(a);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.find("eta(xi) = 1")->passed);
  }

  TEST_CASE("adapted basis for frame vectors keeps the frame order") {
    const auto b1 = adapted_basis(e(1));
    for (int a = 0; a < 6; ++a) CHECK(b1[a] == e(a + 2));
    CHECK(b1.xi() == e(1));
    const auto b7 = adapted_basis(e(7));
    for (int a = 0; a < 6; ++a) CHECK(b7[a] == e(a + 1));
  }

  TEST_CASE("adapted basis is orthonormal, rational and ends with xi") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const V xi = random_unit(seed);
      const auto b = adapted_basis(xi);
      CHECK(validate_adapted_basis(b, xi).ok());
      for (int a = 0; a < kDim; ++a)
        for (int c = 0; c < kDim; ++c) CHECK(dot(b[a], b[c]) == (a == c ? 1 : 0));
      const V x = RationalSampler(seed + 1000).vector();
      CHECK(b.coords(x)[6] == dot(x, xi));
    }
  }

  TEST_CASE("ties pick the lowest index") {
    // xi = (1,1,1,1,0,0,0)/2: pivot e1, w = xi - e1, f2 = H e3 = e3 - w.
    V xi = zero_vector<Q>();
    for (int i = 0; i < 4; ++i) xi[i] = q(1, 2);
    const auto b = adapted_basis(xi);
    V f2 = zero_vector<Q>();
    f2[0] = q(1, 2);
    f2[1] = q(-1, 2);
    f2[2] = q(1, 2);
    f2[3] = q(-1, 2);
    CHECK(b[1] == f2);
    CHECK(validate_adapted_basis(b, xi).ok());
  }

  TEST_CASE("rotating (f1, f2) keeps the basis orthonormal") {
    const V xi = random_unit(4);
    const auto b = rotate_first_pair(adapted_basis(xi), q(3, 5), q(4, 5));
    CHECK(validate_adapted_basis(b, xi).ok());
  }

  TEST_CASE("stereographic parametrisation") {
    std::array<Q, 6> zero;
    for (auto& x : zero) x = 0;
    CHECK(rational_unit_vector(zero) == e(7));
    std::array<Q, 6> u{q(1), q(0), q(0), q(0), q(0), q(0)};
    CHECK(rational_unit_vector(u) == e(1));
  }

  TEST_CASE("phi in the adapted basis is antisymmetric with phi(xi) = 0") {
    const V xi = random_unit(9);
    const auto a = induce_acms(standard_phi<Q>(), xi);
    const auto b = adapted_basis(xi);
    const auto P = phi_in_basis(a, b);
    for (int i = 0; i < kDim; ++i) {
      CHECK(P[6][i] == 0);
      for (int j = 0; j < kDim; ++j) CHECK(P[i][j] == -P[j][i]);
    }
  }
}
