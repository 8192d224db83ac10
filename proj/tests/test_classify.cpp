#include <doctest.h>

#include "support.hpp"

using namespace g2c;
using namespace g2c::test;

TEST_SUITE("classify") {
  TEST_CASE("pure class tensors survive only their own relation") {
    const Model model;
    for (int cls = 1; cls <= 12; ++cls) {
      CAPTURE(cls);
      const auto t = model.pure(cls);
      REQUIRE(validate_tensor(t, model.acms).ok());
      const auto inv = quadratic_invariants(t, model.acms);
      REQUIRE(!is_zero(inv.norm2));
      const Elimination el = class_elimination(inv);
      CHECK_FALSE(el.trivial);
      CHECK_FALSE(el.c(cls).excluded);
      for (int other = 1; other <= 12; ++other)
        if (other != cls) CHECK(el.c(other).excluded);
      CHECK(el.d1.excluded == (cls > 4));
      CHECK(el.d2.excluded == (cls < 5 || cls > 11));

      const SpaceMembership sp = space_membership(t);
      CHECK(sp.d1.member == (cls <= 4));
      CHECK(sp.d2.member == (cls >= 5 && cls <= 11));
      CHECK(sp.c12.member == (cls == 12));
      CHECK_FALSE(sp.trivial.member);
    }
  }

  TEST_CASE("zero tensor is trivial and consistent with every class") {
    const Model model;
    const auto t = model.tensor(zero_tensor<Q>());
    const Elimination el = class_elimination(quadratic_invariants(t, model.acms));
    CHECK(el.trivial);
    for (int k = 1; k <= 12; ++k) CHECK_FALSE(el.c(k).excluded);
    CHECK(space_membership(t).trivial.member);
  }

  TEST_CASE("sasakian3 verdicts with xi = e1") {
    const auto m = manifold("sasakian3");
    const auto in = make_instance(m, e(1));
    const ClassReport r = classify(m, in);
    CHECK(r.named.cosymplectic.value == Tristate::no);
    CHECK(r.named.almost_k_contact.value == Tristate::yes);
    CHECK(r.named.nabla_xi_Phi_zero.value == Tristate::yes);
    CHECK(r.named.semi_cosymplectic.value == Tristate::no);
    CHECK(r.named.sasakian.value == Tristate::no);
    CHECK(r.named.trans_sasakian_necessary.value == Tristate::no);
    CHECK(r.named.trans_sasakian_necessary.lhs == "1");
    CHECK(r.named.trans_sasakian_necessary.rhs == "-1/3");
    CHECK(r.named.nearly_k_cosymplectic_obstruction.value == Tristate::yes);
    CHECK_FALSE(r.space.d1.member);
    CHECK(r.space.d1.witness.find("(e2, e1, e2) = 1") != std::string::npos);
    CHECK(r.audit_ok());
  }

  TEST_CASE("trans-Sasakian test is indeterminate when delta eta != 0") {
    const auto m = manifold("hyperbolic7");
    const auto in = make_instance(m, e(7));
    const ClassReport r = classify(m, in);
    CHECK(r.named.trans_sasakian_necessary.value == Tristate::indeterminate);
    CHECK(to_string(Tristate::indeterminate) == "indeterminate");
  }

  TEST_CASE("flat model is cosymplectic") {
    const auto m = manifold("flat");
    const auto in = make_instance(m, random_unit(2));
    const ClassReport r = classify(m, in);
    CHECK(r.named.cosymplectic.holds());
    CHECK(r.elimination.trivial);
    CHECK(r.audit_ok());
  }

  TEST_CASE("audit passes on random fields and exercises the divergence exclusion") {
    const auto m = manifold("hyperbolic7");
    int div_fired = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto in = make_instance(m, random_unit(seed));
      const ClassReport r = classify(m, in);
      CHECK(r.audit_ok());
      for (const auto& a : r.audit)
        if (a.name.rfind("div(xi) != 0 excludes", 0) == 0 && a.hypothesis) ++div_fired;
    }
    CHECK(div_fired > 0);
  }

  TEST_CASE("inconsistent reports raise") {
    const auto m = manifold("sasakian3");
    const auto in = make_instance(m, e(1));
    ClassReport r = classify(m, in);
    CHECK_NOTHROW(require_consistent(r));
    r.audit.push_back({"planted", true, false, "x"});
    CHECK_FALSE(r.audit_ok());
    CHECK(r.first_audit_failure()->name == "planted");
    CHECK_THROWS_AS(require_consistent(r), InternalConsistencyError);
  }

  TEST_CASE("float backend reaches the same verdicts") {
    const auto mq = manifold<Q>("sasakian3");
    const auto md = manifold<double>("sasakian3");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const V xi = random_unit(seed);
      const ClassReport rq = classify(mq, make_instance(mq, xi));
      const ClassReport rd = classify(md, make_instance(md, convert<double>(xi)));
      CHECK(rd.audit_ok());
      for (int k = 1; k <= 12; ++k) CHECK(rq.elimination.c(k).excluded == rd.elimination.c(k).excluded);
      CHECK(rq.named.almost_k_contact.value == rd.named.almost_k_contact.value);
    }
  }
}
