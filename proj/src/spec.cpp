#include "g2c/spec.hpp"

#include <fstream>
#include <sstream>

namespace g2c {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError(where + ": " + what);
}

Rational rational_field(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ValidationError& e) {
    bad(where, e.what());
  }
}

int index_field(const json& obj, const char* key, const std::string& where) {
  const std::string at = where + "." + key;
  if (!obj.contains(key)) bad(at, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) bad(at, "expected an integer index");
  const int i = v.get<int>();
  if (i < 1 || i > kDim) bad(at, "index " + std::to_string(i) + " out of range 1..7");
  return i;
}

template <std::size_t N>
std::array<Rational, N> rational_array(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) bad(where, "expected " + std::to_string(N) + " rational strings");
  std::array<Rational, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = rational_field(j[k], where + "[" + std::to_string(k) + "]");
  return out;
}

template <std::size_t N>
json rational_array_json(const std::array<Rational, N>& a) {
  json out = json::array();
  for (const auto& x : a) out.push_back(to_string(x));
  return out;
}

}  // namespace

template <Scalar S>
StructureConstants<S> ManifoldSpec::structure_constants() const {
  std::vector<typename StructureConstants<S>::Bracket> br;
  for (const auto& b : brackets) br.push_back({b.i - 1, b.j - 1, b.k - 1, from_rational<S>(b.value)});
  return StructureConstants<S>::from_brackets(br);
}

template <Scalar S>
G2Structure<S> ManifoldSpec::g2() const {
  KForm<S> form(3);
  for (const auto& t : phi) form += KForm<S>::monomial({t.i - 1, t.j - 1, t.k - 1}, from_rational<S>(t.coeff));
  return G2Structure<S>(std::move(form));
}

template StructureConstants<Rational> ManifoldSpec::structure_constants<Rational>() const;
template StructureConstants<double> ManifoldSpec::structure_constants<double>() const;
template G2Structure<Rational> ManifoldSpec::g2<Rational>() const;
template G2Structure<double> ManifoldSpec::g2<double>() const;

ManifoldSpec spec_from_json(const json& j) {
  if (!j.is_object()) bad("spec", "expected a JSON object");
  if (!j.contains("version")) bad("version", "missing");
  if (!j.at("version").is_number_integer() || j.at("version").get<int>() != kSpecVersion)
    bad("version", "unsupported schema version (expected 1)");

  ManifoldSpec s;
  if (!j.contains("name") || !j.at("name").is_string()) bad("name", "expected a string");
  s.name = j.at("name").get<std::string>();
  if (j.contains("backend")) {
    if (!j.at("backend").is_string()) bad("backend", "expected \"exact\" or \"float\"");
    s.backend = j.at("backend").get<std::string>();
    if (s.backend != "exact" && s.backend != "float") bad("backend", "expected \"exact\" or \"float\", got \"" + s.backend + "\"");
  }

  if (!j.contains("brackets") || !j.at("brackets").is_array()) bad("brackets", "expected an array");
  const json& br = j.at("brackets");
  for (std::size_t n = 0; n < br.size(); ++n) {
    const std::string where = "brackets[" + std::to_string(n) + "]";
    if (!br[n].is_object()) bad(where, "expected an object {i,j,k,value}");
    ManifoldSpec::Bracket b{index_field(br[n], "i", where), index_field(br[n], "j", where), index_field(br[n], "k", where), 0};
    if (b.i >= b.j) bad(where, "requires i < j");
    if (!br[n].contains("value")) bad(where + ".value", "missing");
    b.value = rational_field(br[n].at("value"), where + ".value");
    s.brackets.push_back(b);
  }

  if (!j.contains("phi") || !j.at("phi").is_array()) bad("phi", "expected an array");
  const json& ph = j.at("phi");
  for (std::size_t n = 0; n < ph.size(); ++n) {
    const std::string where = "phi[" + std::to_string(n) + "]";
    if (!ph[n].is_object()) bad(where, "expected an object {i,j,k,coeff}");
    ManifoldSpec::PhiTerm t{index_field(ph[n], "i", where), index_field(ph[n], "j", where), index_field(ph[n], "k", where), 0};
    if (!(t.i < t.j && t.j < t.k)) bad(where, "requires i < j < k");
    if (!ph[n].contains("coeff")) bad(where + ".coeff", "missing");
    t.coeff = rational_field(ph[n].at("coeff"), where + ".coeff");
    s.phi.push_back(t);
  }

  if (j.contains("xi") && j.contains("u")) bad("xi", "give either xi or u, not both");
  if (j.contains("xi")) s.xi = rational_array<7>(j.at("xi"), "xi");
  if (j.contains("u")) s.u = rational_array<6>(j.at("u"), "u");
  if (j.contains("allow_non_jacobi")) {
    if (!j.at("allow_non_jacobi").is_boolean()) bad("allow_non_jacobi", "expected a boolean");
    s.allow_non_jacobi = j.at("allow_non_jacobi").get<bool>();
  }
  return s;
}

json spec_to_json(const ManifoldSpec& s) {
  json j;
  j["version"] = kSpecVersion;
  j["name"] = s.name;
  j["backend"] = s.backend;
  j["brackets"] = json::array();
  for (const auto& b : s.brackets) j["brackets"].push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"value", to_string(b.value)}});
  j["phi"] = json::array();
  for (const auto& t : s.phi) j["phi"].push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"coeff", to_string(t.coeff)}});
  if (s.xi) j["xi"] = rational_array_json(*s.xi);
  if (s.u) j["u"] = rational_array_json(*s.u);
  if (s.allow_non_jacobi) j["allow_non_jacobi"] = true;
  return j;
}

void validate_spec(const ManifoldSpec& spec, const ParseOptions& opts) {
  const auto sc = spec.structure_constants<Rational>();
  const CheckReport structure = validate_structure(sc);
  for (const auto& item : structure.items) {
    if (item.passed) continue;
    if (item.name == "jacobi" && spec.allow_non_jacobi) continue;
    throw ValidationError("brackets: " + item.name + " fails at " + item.witness);
  }
  const auto g2 = spec.g2<Rational>();
  const CheckReport cross = validate_cross_axioms(g2);
  if (const CheckItem* f = cross.first_failure())
    throw ValidationError("phi: cross product " + f->name + " fails at " + f->witness);
  if (spec.xi && opts.require_unit_xi) {
    Rational n2 = 0;
    for (const auto& x : *spec.xi) n2 += x * x;
    if (n2 != 1) throw ValidationError("xi: not a unit vector, g(xi,xi) = " + to_string(n2));
  }
}

ManifoldSpec parse_spec_text(std::string_view text, const ParseOptions& opts) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  ManifoldSpec s = spec_from_json(j);
  validate_spec(s, opts);
  return s;
}

ManifoldSpec parse_spec(const std::string& path, const ParseOptions& opts) {
  constexpr std::string_view prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) {
    ManifoldSpec s = builtin_example(path.substr(prefix.size()));
    validate_spec(s, opts);
    return s;
  }
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spec_text(buf.str(), opts);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

namespace {

std::vector<ManifoldSpec::PhiTerm> terms(std::initializer_list<std::array<int, 4>> list) {
  std::vector<ManifoldSpec::PhiTerm> out;
  for (const auto& t : list) out.push_back({t[0], t[1], t[2], Rational(t[3])});
  return out;
}

std::vector<ManifoldSpec::Bracket> brackets(std::initializer_list<std::array<int, 4>> list) {
  std::vector<ManifoldSpec::Bracket> out;
  for (const auto& t : list) out.push_back({t[0], t[1], t[2], Rational(t[3])});
  return out;
}

std::array<Rational, 7> e(int i) {
  std::array<Rational, 7> v;
  for (auto& x : v) x = 0;
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

const std::vector<ManifoldSpec::PhiTerm> kPhi0 =
    terms({{1, 2, 3, 1}, {1, 4, 5, 1}, {1, 6, 7, 1}, {2, 4, 6, 1}, {2, 5, 7, -1}, {3, 4, 7, -1}, {3, 5, 6, -1}});

}  // namespace

std::vector<ManifoldSpec> builtin_examples() {
  std::vector<ManifoldSpec> out;

  ManifoldSpec sas;
  sas.name = "sasakian3";
  // [e3,e1] = 2e2 is stored as [e1,e3] = -2e2.
  sas.brackets = brackets({{1, 2, 3, 2}, {2, 3, 1, 2}, {1, 3, 2, -2}, {4, 5, 1, 2}, {6, 7, 1, 2},
                           {4, 6, 2, 2}, {5, 7, 2, -2}, {4, 7, 3, 2}, {5, 6, 3, 2}});
  sas.phi = terms({{1, 2, 3, 1}, {1, 4, 5, -1}, {1, 6, 7, -1}, {2, 4, 6, 1}, {2, 5, 7, -1}, {3, 4, 7, 1}, {3, 5, 6, 1}});
  sas.xi = e(1);
  sas.allow_non_jacobi = true;
  out.push_back(sas);

  ManifoldSpec flat;
  flat.name = "flat";
  flat.phi = kPhi0;
  flat.xi = e(7);
  out.push_back(flat);

  ManifoldSpec hyp;
  hyp.name = "hyperbolic7";
  // [e_i, e7] = -e_i, i.e. ad(e7) = id on span(e1..e6).
  for (int i = 1; i <= 6; ++i) hyp.brackets.push_back({i, 7, i, Rational(-1)});
  hyp.phi = kPhi0;
  hyp.xi = e(7);
  out.push_back(hyp);
  return out;
}

ManifoldSpec builtin_example(const std::string& name) {
  for (auto& s : builtin_examples())
    if (s.name == name) return s;
  throw ValidationError("unknown built-in example '" + name + "' (available: sasakian3, flat, hyperbolic7)");
}

}  // namespace g2c
