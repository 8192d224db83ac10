#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "support.hpp"

using namespace g2c;
using namespace g2c::test;
using nlohmann::json;

namespace {

json flat_json() { return spec_to_json(builtin_example("flat")); }

std::string error_of(const json& j) {
  try {
    parse_spec_text(j.dump());
  } catch (const ValidationError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("spec") {
  TEST_CASE("sasakian3 carries its nine brackets and seven phi terms") {
    const ManifoldSpec s = parse_spec("builtin:sasakian3");
    CHECK(s.brackets.size() == 9);
    CHECK(s.phi.size() == 7);
    CHECK(s.allow_non_jacobi);
    const auto c = s.structure_constants<Q>();
    CHECK(c.bracket(e(1), e(2)) == q(2) * e(3));
    CHECK(c.bracket(e(3), e(1)) == q(2) * e(2));
    CHECK(c.bracket(e(5), e(7)) == q(-2) * e(2));
    CHECK(s.g2<Q>().phi().to_string("eta") ==
          "eta^{123} - eta^{145} - eta^{167} + eta^{246} - eta^{257} + eta^{347} + eta^{356}");
  }

  TEST_CASE("flat has no brackets") {
    const auto c = builtin_example("flat").structure_constants<Q>();
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) CHECK(is_zero(c.bracket(e(i), e(j))));
  }

  TEST_CASE("round trip is bit exact") {
    for (const auto& s : builtin_examples()) {
      const json j = spec_to_json(s);
      CHECK(spec_to_json(spec_from_json(j)) == j);
    }
    json j = flat_json();
    j.erase("xi");
    j["u"] = {"-7/16", "0", "12345678901234567890/3", "1", "-1/9", "5/13"};
    j["phi"][0]["coeff"] = "2/2";
    const json back = spec_to_json(spec_from_json(j));
    CHECK(back["u"][2] == "4115226300411522630");
    CHECK(back["phi"][0]["coeff"] == "1");
    CHECK(spec_to_json(spec_from_json(back)) == back);
  }

  TEST_CASE("schema errors name their location") {
    json j = flat_json();
    j["phi"][0]["coeff"] = "1/0";
    CHECK(contains(error_of(j), "phi[0].coeff"));

    j = flat_json();
    j["phi"][1]["coeff"] = 0.5;
    CHECK(contains(error_of(j), "phi[1].coeff: expected a rational string"));

    j = flat_json();
    j["brackets"] = json::array({{{"i", 1}, {"j", 8}, {"k", 2}, {"value", "1"}}});
    CHECK(contains(error_of(j), "brackets[0].j: index 8 out of range"));

    j = flat_json();
    j["brackets"] = json::array({{{"i", 2}, {"j", 1}, {"k", 3}, {"value", "1"}}});
    CHECK(contains(error_of(j), "brackets[0]: requires i < j"));

    j = flat_json();
    j["phi"][2]["k"] = 1;
    CHECK(contains(error_of(j), "phi[2]: requires i < j < k"));

    j = flat_json();
    j["version"] = 2;
    CHECK(contains(error_of(j), "version"));

    CHECK_THROWS_AS(parse_spec_text("{not json"), ValidationError);
    CHECK_THROWS_AS(parse_spec("/nonexistent/spec.json"), ValidationError);
    CHECK_THROWS_AS(parse_spec("builtin:nope"), ValidationError);
  }

  TEST_CASE("Jacobi gate names the failing triple unless explicitly allowed") {
    json j = flat_json();
    j["brackets"] = json::array({{{"i", 1}, {"j", 2}, {"k", 1}, {"value", "1"}}, {{"i", 1}, {"j", 3}, {"k", 2}, {"value", "1"}}});
    const std::string err = error_of(j);
    CHECK(contains(err, "jacobi"));
    CHECK(contains(err, "(e1,e2,e3)"));
    j["allow_non_jacobi"] = true;
    CHECK(error_of(j).empty());
  }

  TEST_CASE("cross product gate") {
    json j = flat_json();
    j["phi"] = json::array({{{"i", 1}, {"j", 2}, {"k", 3}, {"coeff", "1"}}});
    CHECK(contains(error_of(j), "phi: cross product"));
  }

  TEST_CASE("xi of norm 2 reports the squared norm 4") {
    json j = flat_json();
    j["xi"] = {"2", "0", "0", "0", "0", "0", "0"};
    CHECK(contains(error_of(j), "g(xi,xi) = 4"));
    ParseOptions lax;
    lax.require_unit_xi = false;
    CHECK_NOTHROW(parse_spec_text(j.dump(), lax));
  }

  TEST_CASE("files on disk") {
    const std::string path = "g2c_test_spec.json";
    {
      std::ofstream out(path);
      out << spec_to_json(builtin_example("hyperbolic7")).dump(2);
    }
    const ManifoldSpec s = parse_spec(path);
    CHECK(s.name == "hyperbolic7");
    CHECK(s.brackets.size() == 6);
    std::remove(path.c_str());
  }
}
