#include <doctest.h>

#include "support.hpp"

using namespace g2c;
using namespace g2c::test;

namespace {

StructureConstants<Q> brackets(std::vector<StructureConstants<Q>::Bracket> b) {
  return StructureConstants<Q>::from_brackets(b);
}

KForm<Q> random_form(RationalSampler& s, int degree) {
  KForm<Q> f(degree);
  for (int m = 0; m < kMaskCount; ++m)
    if (mask_degree(static_cast<Mask>(m)) == degree) f[static_cast<Mask>(m)] = s.next();
  return f;
}

}  // namespace

TEST_SUITE("frame") {
  TEST_CASE("brackets are stored antisymmetrically") {
    const auto c = brackets({{0, 1, 2, q(2)}});
    CHECK(c.bracket(e(1), e(2)) == q(2) * e(3));
    CHECK(c.bracket(e(2), e(1)) == q(-2) * e(3));
    CHECK(validate_structure(c).ok());
  }

  TEST_CASE("Jacobi failure names the triple") {
    // [e1,e2] = e1, [e1,e3] = e2: the cyclic sum at (e1,e2,e3) is e2.
    const auto c = brackets({{0, 1, 0, q(1)}, {0, 2, 1, q(1)}});
    const CheckReport r = validate_structure(c);
    REQUIRE(r.find("jacobi") != nullptr);
    CHECK_FALSE(r.find("jacobi")->passed);
    CHECK(r.find("jacobi")->witness.find("(e1,e2,e3)") != std::string::npos);
  }

  TEST_CASE("cyclic brackets of so(3) type satisfy Jacobi") {
    const auto c = brackets({{0, 1, 2, q(1)}, {0, 2, 1, q(1)}, {1, 2, 0, q(1)}});
    CHECK(validate_structure(c).find("jacobi")->passed);
  }

  TEST_CASE("hyperbolic7 connection matches the hand-derived Koszul values") {
    // [e7, e_i] = e_i gives nabla_{e_i} e_i = e7, nabla_{e_i} e7 = -e_i (i <= 6)
    // and nabla_{e7} = 0.
    const auto m = manifold("hyperbolic7");
    for (int i = 1; i <= 6; ++i) {
      CHECK(m.conn.nabla(e(i), e(i)) == e(7));
      CHECK(m.conn.nabla(e(i), e(7)) == q(-1) * e(i));
      for (int j = 1; j <= 7; ++j) {
        CHECK(is_zero(m.conn.nabla(e(7), e(j))));
        if (j != i && j != 7) CHECK(is_zero(m.conn.nabla(e(i), e(j))));
      }
    }
    CHECK(divergence(m.conn, e(7)) == q(-6));
  }

  TEST_CASE("Levi-Civita is metric and torsion free, even for random constants") {
    RationalSampler s(17);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<StructureConstants<Q>::Bracket> b;
      for (int i = 0; i < kDim; ++i)
        for (int j = i + 1; j < kDim; ++j) b.push_back({i, j, (i + 2 * j + trial) % kDim, s.next()});
      const auto c = brackets(b);
      CHECK(validate_connection(c, levi_civita(c)).ok());
    }
    const auto m = manifold("sasakian3");
    CHECK(validate_connection(m.sc, m.conn).ok());
  }

  TEST_CASE("d of a 1-form is minus the form of the bracket") {
    const auto m = manifold("hyperbolic7");
    RationalSampler s(2);
    const V w = s.vector();
    const auto dw = ce_differential(m.sc, KForm<Q>::one_form(w));
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) CHECK(eval(dw, {e(i), e(j)}) == -dot(w, m.sc.bracket(e(i), e(j))));
  }

  TEST_CASE("d is an antiderivation") {
    for (const char* name : {"sasakian3", "hyperbolic7"}) {
      const auto m = manifold(name);
      RationalSampler s(6);
      for (int p = 0; p <= 3; ++p) {
        const auto a = random_form(s, p);
        const auto b = random_form(s, 2);
        const Q sign = p % 2 == 0 ? 1 : -1;
        CHECK(ce_differential(m.sc, wedge(a, b)) ==
              wedge(ce_differential(m.sc, a), b) + sign * wedge(a, ce_differential(m.sc, b)));
      }
    }
  }

  TEST_CASE("d agrees with the antisymmetrised Levi-Civita derivative") {
    for (const char* name : {"sasakian3", "hyperbolic7"}) {
      const auto m = manifold(name);
      RationalSampler s(12);
      for (int k = 0; k <= 5; ++k) {
        const auto w = random_form(s, k);
        CHECK(antisymmetrized_nabla(m.conn, w) == ce_differential(m.sc, w));
      }
    }
  }

  TEST_CASE("d squares to zero when Jacobi holds") {
    const auto m = manifold("hyperbolic7");
    RationalSampler s(13);
    for (int k = 0; k <= 5; ++k) CHECK(ce_differential(m.sc, ce_differential(m.sc, random_form(s, k))).is_zero());
    CHECK_THROWS_AS(ce_differential(m.sc, KForm<Q>(7)), std::invalid_argument);
  }

  TEST_CASE("G2 probe") {
    const auto flat = manifold("flat");
    CHECK(flat.probe.parallel);
    CHECK(flat.nearly_parallel());

    const auto sas = manifold("sasakian3");
    CHECK_FALSE(sas.probe.parallel);
    CHECK(sas.probe.candidate_k == q(-4));
    CHECK(sas.probe.matching_components == 5);
    CHECK(sas.probe.star_components == 7);
    CHECK(sas.probe.mismatches.size() == 2);
    CHECK_FALSE(sas.probe.nearly_parallel.has_value());

    // The model form on the hyperbolic algebra: d phi is not proportional to star phi.
    const auto hyp = manifold("hyperbolic7");
    CHECK_FALSE(hyp.probe.parallel);
    CHECK_FALSE(hyp.nearly_parallel());
  }

  TEST_CASE("connection rendering") {
    const auto m = manifold("sasakian3");
    CHECK(format_connection(m.conn).rfind("nabla_e1 e2 = e3\n", 0) == 0);
  }
}
