#include "g2c/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "g2c/classify.hpp"
#include "g2c/random.hpp"

namespace g2c {

using nlohmann::json;

namespace {

constexpr const char* kBasisNames[kDim] = {"f1", "f2", "f3", "f4", "f5", "f6", "xi"};

template <Scalar S>
json vec_json(const Vector7<S>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json checks_json(const CheckReport& r) {
  json out = json::array();
  for (const auto& it : r.items) out.push_back({{"name", it.name}, {"passed", it.passed}, {"witness", it.witness}});
  return out;
}

json membership_json(const Membership& m) { return {{"member", m.member}, {"witness", m.witness}}; }

json verdict_json(const ClassVerdict& v) {
  return {{"name", v.name}, {"excluded", v.excluded}, {"witness", v.witness}};
}

json named_json(const NamedCheck& c) {
  return {{"value", to_string(c.value)}, {"witness", c.witness}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

std::string resolve_backend(const ManifoldSpec& spec, const std::string& requested) {
  const std::string b = requested.empty() ? spec.backend : requested;
  if (b != "exact" && b != "float") throw ValidationError("backend: expected \"exact\" or \"float\", got \"" + b + "\"");
  return b;
}

template <Scalar S>
json connection_json(const Connection<S>& conn) {
  json entries = json::array();
  bool diagonal_zero = true;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Vector7<S>& v = conn.gamma[i][j];
      if (i == j && !is_zero(v)) diagonal_zero = false;
      if (is_zero(v)) continue;
      entries.push_back({{"i", i + 1}, {"j", j + 1}, {"value", format_vector(v)}});
    }
  return {{"entries", entries}, {"diagonal_zero", diagonal_zero}};
}

/// First monomial w with d(dw) != 0, over degrees 1..5.
template <Scalar S>
json dd_json(const StructureConstants<S>& sc) {
  for (int m = 1; m < kMaskCount; ++m) {
    const int deg = mask_degree(static_cast<Mask>(m));
    if (deg > kDim - 2) continue;
    KForm<S> w(deg);
    w[static_cast<Mask>(m)] = S(1);
    const KForm<S> dd = ce_differential(sc, ce_differential(sc, w));
    if (!dd.is_zero())
      return {{"zero", false}, {"witness", "d(d eta^" + mask_label(static_cast<Mask>(m)) + ") = " + dd.to_string("eta")}};
  }
  return {{"zero", true}, {"witness", ""}};
}

template <Scalar S>
json probe_json(const G2ClassProbe<S>& p) {
  json out;
  out["parallel"] = p.parallel;
  out["nearly_parallel"] = p.nearly_parallel.has_value();
  out["k"] = p.nearly_parallel ? json(to_string(*p.nearly_parallel)) : json(nullptr);
  out["candidate_k"] = to_string(p.candidate_k);
  out["matching_components"] = p.matching_components;
  out["star_components"] = p.star_components;
  out["mismatches"] = p.mismatches;
  return out;
}

template <Scalar S>
json tables_impl(const Manifold<S>& m) {
  json t;
  t["connection"] = connection_json(m.conn);
  json cross = json::array();
  for (const auto& e : cross_table(m.g2))
    cross.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"value", format_vector(e.value)}});
  t["cross_products"] = cross;
  json deta = json::array();
  for (int k = 0; k < kDim; ++k) {
    const KForm<S> d = ce_differential(m.sc, KForm<S>::monomial({k}));
    deta.push_back({{"k", k + 1}, {"value", d.to_string("eta")}, {"half_convention", (from_int<S>(1) / from_int<S>(2) * d).to_string("eta")}});
  }
  t["d_eta"] = deta;
  t["phi"] = m.g2.phi().to_string("eta");
  t["dphi"] = m.probe.dphi.to_string("eta");
  t["star_phi"] = m.probe.star_phi.to_string("eta");
  t["probe"] = probe_json(m.probe);
  t["d_squared"] = dd_json(m.sc);
  return t;
}

template <Scalar S>
json alpha_entries(const Tensor3<S>& a, bool adapted) {
  json out = json::array();
  for (int x = 0; x < kDim; ++x)
    for (int y = 0; y < kDim; ++y)
      for (int z = y + 1; z < kDim; ++z) {
        if (is_zero(a[x][y][z])) continue;
        if (adapted)
          out.push_back({{"x", kBasisNames[x]}, {"y", kBasisNames[y]}, {"z", kBasisNames[z]}, {"value", to_string(a[x][y][z])}});
        else
          out.push_back({{"x", x + 1}, {"y", y + 1}, {"z", z + 1}, {"value", to_string(a[x][y][z])}});
      }
  return out;
}

template <Scalar S>
json analyze_impl(const Manifold<S>& m, const Vector7<S>& xi) {
  const Instance<S> in = make_instance(m, xi);
  const ClassReport cr = classify(m, in);

  json r;
  r["xi"] = vec_json(xi);
  r["tables"] = tables_impl(m);

  json acms;
  acms["checks"] = checks_json(validate_acms(in.acms));
  json basis = json::array();
  for (int a = 0; a < kDim; ++a) basis.push_back({{"name", kBasisNames[a]}, {"vector", format_vector(in.basis[a])}});
  acms["adapted_basis"] = basis;
  acms["basis_checks"] = checks_json(validate_adapted_basis(in.basis, xi));
  r["acms"] = acms;

  json tensor;
  tensor["checks"] = checks_json(validate_tensor(in.tensor, in.acms));
  tensor["frame"] = alpha_entries(in.tensor.frame, false);
  tensor["adapted"] = alpha_entries(in.tensor.alpha, true);
  r["nabla_Phi"] = tensor;

  const auto& d = in.diag;
  json diag;
  diag["div_xi"] = to_string(d.div_xi);
  diag["nabla_xi_xi"] = vec_json(d.nabla_xi_xi);
  diag["v"] = vec_json(d.v);
  diag["g_xi_v"] = to_string(d.g_xi_v);
  diag["delta_Phi_frame"] = vec_json(codifferential_phi_frame(in.tensor));
  diag["delta_Phi_adapted"] = vec_json(codifferential_phi(in.tensor));
  diag["delta_eta"] = to_string(d.delta_eta);
  diag["d_eta"] = ce_differential(m.sc, KForm<S>::one_form(in.acms.eta)).to_string("eta");
  diag["killing"] = d.is_killing;
  diag["killing_witness"] = d.killing_witness;
  diag["xi_parallel"] = d.xi_parallel;
  r["diagnostics"] = diag;

  json inv;
  for (int k = 1; k <= 18; ++k) inv["i" + std::to_string(k)] = to_string(in.inv.at(k));
  inv["norm2"] = to_string(in.inv.norm2);
  inv["c12"] = vec_json(in.inv.c12);
  inv["c12_norm2"] = to_string(in.inv.c12_norm2);
  r["invariants"] = inv;

  json cls;
  cls["space"] = {{"trivial", membership_json(cr.space.trivial)},
                  {"D1", membership_json(cr.space.d1)},
                  {"D2", membership_json(cr.space.d2)},
                  {"C12", membership_json(cr.space.c12)}};
  json classes = json::array();
  for (const auto& v : cr.elimination.classes) classes.push_back(verdict_json(v));
  cls["elimination"] = {{"trivial", cr.elimination.trivial},
                        {"classes", classes},
                        {"D1", verdict_json(cr.elimination.d1)},
                        {"D2", verdict_json(cr.elimination.d2)},
                        {"c4_ratio", std::to_string(kC4Ratio)}};
  const auto& n = cr.named;
  cls["named"] = {{"cosymplectic", named_json(n.cosymplectic)},
                  {"almost_k_contact", named_json(n.almost_k_contact)},
                  {"nabla_xi_Phi_zero", named_json(n.nabla_xi_Phi_zero)},
                  {"semi_cosymplectic", named_json(n.semi_cosymplectic)},
                  {"sasakian", named_json(n.sasakian)},
                  {"trans_sasakian_necessary", named_json(n.trans_sasakian_necessary)},
                  {"nearly_k_cosymplectic_obstruction", named_json(n.nearly_k_cosymplectic_obstruction)}};
  r["classification"] = cls;

  json audit = json::array();
  for (const auto& a : cr.audit)
    audit.push_back({{"name", a.name}, {"hypothesis", a.hypothesis}, {"passed", a.passed}, {"detail", a.detail}});
  r["audit"] = {{"passed", cr.audit_ok()}, {"items", audit}};
  return r;
}

Rational norm2(const std::array<Rational, 7>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

json spec_header(const ManifoldSpec& spec, const std::string& backend) {
  json h;
  h["name"] = spec.name;
  h["backend"] = backend;
  if (backend == "float") h["tolerance"] = to_string(tolerance());
  return h;
}

}  // namespace

json validation_report(const ManifoldSpec& spec) {
  const auto sc = spec.structure_constants<Rational>();
  json r;
  r["name"] = spec.name;
  r["structure"] = checks_json(validate_structure(sc));
  r["allow_non_jacobi"] = spec.allow_non_jacobi;
  r["connection"] = checks_json(validate_connection(sc, levi_civita(sc)));
  r["cross_axioms"] = checks_json(validate_cross_axioms(spec.g2<Rational>()));
  return r;
}

json manifold_tables(const ManifoldSpec& spec, const std::string& requested) {
  const std::string backend = resolve_backend(spec, requested);
  json r = spec_header(spec, backend);
  if (backend == "exact")
    r["tables"] = tables_impl(make_manifold(spec.structure_constants<Rational>(), spec.g2<Rational>()));
  else
    r["tables"] = tables_impl(make_manifold(spec.structure_constants<double>(), spec.g2<double>()));
  return r;
}

json analyze(const ManifoldSpec& spec, const AnalyzeOptions& opts) {
  const std::string backend = resolve_backend(spec, opts.backend);
  if (opts.normalize && backend != "float") throw ValidationError("--normalize requires the float backend");
  if (opts.xi && opts.u) throw ValidationError("give either --xi or --u, not both");

  std::array<Rational, 7> xi;
  std::optional<std::array<Rational, 6>> u;
  std::string source;
  if (opts.xi) {
    xi = *opts.xi;
    source = "xi option";
  } else if (opts.u) {
    u = opts.u;
    source = "u option";
  } else if (spec.xi) {
    xi = *spec.xi;
    source = "spec xi";
  } else if (spec.u) {
    u = spec.u;
    source = "spec u";
  } else {
    throw ValidationError("xi: no unit field given (set xi or u in the spec, or pass --xi/--u)");
  }
  if (u) xi = rational_unit_vector(*u);

  json r = spec_header(spec, backend);
  r["xi_source"] = source;
  if (u) {
    r["u"] = json::array();
    for (const auto& x : *u) r["u"].push_back(to_string(x));
  }

  const Rational n2 = norm2(xi);
  if (backend == "exact") {
    if (n2 != 1) throw ValidationError("xi: not a unit vector, g(xi,xi) = " + to_string(n2));
    const auto m = make_manifold(spec.structure_constants<Rational>(), spec.g2<Rational>());
    r.update(analyze_impl(m, xi));
  } else {
    Vector7<double> xd = convert<double>(xi);
    const double n2d = n2.get_d();
    if (opts.normalize) {
      if (n2d == 0.0) throw ValidationError("xi: cannot normalize the zero vector");
      const double len = std::sqrt(n2d);
      for (auto& x : xd) x /= len;
    } else if (std::abs(n2d - 1.0) > tolerance()) {
      throw ValidationError("xi: not a unit vector, g(xi,xi) = " + to_string(n2) + " (use --normalize)");
    }
    const auto m = make_manifold(spec.structure_constants<double>(), spec.g2<double>());
    r.update(analyze_impl(m, xd));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text rendering. Every value printed here is read back from the JSON report.

namespace {

std::string tuple(const json& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].get<std::string>();
  return s + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void render_checks(std::ostringstream& o, const json& checks) {
  for (const auto& c : checks) {
    o << "  " << (c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>();
    if (!c["witness"].get<std::string>().empty()) o << "  [" << c["witness"].get<std::string>() << "]";
    o << "\n";
  }
}

void render_tables(std::ostringstream& o, const json& t) {
  o << "Levi-Civita connection (nonzero nabla_ei ej):\n";
  for (const auto& e : t["connection"]["entries"])
    o << "  nabla_e" << e["i"].get<int>() << " e" << e["j"].get<int>() << " = " << e["value"].get<std::string>() << "\n";
  o << "  nabla_ei ei = 0 for all i: " << yes_no(t["connection"]["diagonal_zero"].get<bool>()) << "\n";
  o << "Cross products:\n";
  for (const auto& e : t["cross_products"])
    o << "  e" << e["i"].get<int>() << " x e" << e["j"].get<int>() << " = " << e["value"].get<std::string>() << "\n";
  o << "Exterior derivatives of the coframe (d eta(x,y) = -eta([x,y]); half convention in brackets):\n";
  for (const auto& e : t["d_eta"])
    o << "  d eta" << e["k"].get<int>() << " = " << e["value"].get<std::string>() << "  [" << e["half_convention"].get<std::string>()
      << "]\n";
  o << "d o d = 0: " << yes_no(t["d_squared"]["zero"].get<bool>());
  if (!t["d_squared"]["zero"].get<bool>()) o << "  [" << t["d_squared"]["witness"].get<std::string>() << "]";
  o << "\n";
  o << "phi      = " << t["phi"].get<std::string>() << "\n";
  o << "d phi    = " << t["dphi"].get<std::string>() << "\n";
  o << "star phi = " << t["star_phi"].get<std::string>() << "\n";
  const json& p = t["probe"];
  o << "G2 probe: parallel = " << yes_no(p["parallel"].get<bool>()) << ", "
    << (p["k"].is_null() ? std::string("no k with d phi = k star phi") : "d phi = k star phi with k = " + p["k"].get<std::string>())
    << "\n";
  o << "  candidate k = " << p["candidate_k"].get<std::string>() << " (ratio d phi / star phi on "
    << p["matching_components"].get<int>() << " of the " << p["star_components"].get<int>()
    << " nonzero star phi components)\n";
  for (const auto& s : p["mismatches"]) o << "  mismatch " << s.get<std::string>() << "\n";
}

}  // namespace

std::string render_tables_text(const json& r) {
  std::ostringstream o;
  o << "Manifold: " << r["name"].get<std::string>() << " (" << r["backend"].get<std::string>() << " backend)\n";
  render_tables(o, r["tables"]);
  return o.str();
}

std::string render_text(const json& r) {
  std::ostringstream o;
  o << "Manifold: " << r["name"].get<std::string>() << " (" << r["backend"].get<std::string>() << " backend";
  if (r.contains("tolerance")) o << ", tolerance " << r["tolerance"].get<std::string>();
  o << ")\n";
  o << "xi = " << tuple(r["xi"]) << "  from " << r["xi_source"].get<std::string>();
  if (r.contains("u")) o << ", u = " << tuple(r["u"]);
  o << "\n\n";
  render_tables(o, r["tables"]);

  o << "\nAlmost contact metric structure:\n";
  render_checks(o, r["acms"]["checks"]);
  o << "Adapted basis:\n";
  for (const auto& b : r["acms"]["adapted_basis"])
    o << "  " << b["name"].get<std::string>() << " = " << b["vector"].get<std::string>() << "\n";
  render_checks(o, r["acms"]["basis_checks"]);

  o << "\nnabla Phi:\n";
  render_checks(o, r["nabla_Phi"]["checks"]);
  o << "  nonzero (nabla_ex Phi)(ey, ez), y < z:\n";
  for (const auto& e : r["nabla_Phi"]["frame"])
    o << "    (nabla_e" << e["x"].get<int>() << " Phi)(e" << e["y"].get<int>() << ", e" << e["z"].get<int>()
      << ") = " << e["value"].get<std::string>() << "\n";

  const json& d = r["diagnostics"];
  o << "\nDiagnostics:\n";
  o << "  div xi         = " << d["div_xi"].get<std::string>() << "\n";
  o << "  nabla_xi xi    = " << tuple(d["nabla_xi_xi"]) << "\n";
  o << "  v              = " << tuple(d["v"]) << "\n";
  o << "  g(xi, v)       = " << d["g_xi_v"].get<std::string>() << "\n";
  o << "  delta Phi (e)  = " << tuple(d["delta_Phi_frame"]) << "\n";
  o << "  delta Phi (f)  = " << tuple(d["delta_Phi_adapted"]) << "\n";
  o << "  delta eta      = " << d["delta_eta"].get<std::string>() << "\n";
  o << "  d eta          = " << d["d_eta"].get<std::string>() << "\n";
  o << "  Killing        = " << yes_no(d["killing"].get<bool>());
  if (!d["killing_witness"].get<std::string>().empty()) o << "  [" << d["killing_witness"].get<std::string>() << "]";
  o << "\n  nabla xi = 0   = " << yes_no(d["xi_parallel"].get<bool>()) << "\n";

  const json& inv = r["invariants"];
  o << "\nQuadratic invariants:\n";
  for (int k = 1; k <= 18; ++k) {
    const std::string key = "i" + std::to_string(k);
    o << "  " << key << (k < 10 ? "  = " : " = ") << inv[key].get<std::string>() << "\n";
  }
  o << "  |alpha|^2 = " << inv["norm2"].get<std::string>() << "\n";
  o << "  c12 = " << tuple(inv["c12"]) << ", |c12|^2 = " << inv["c12_norm2"].get<std::string>() << "\n";

  const json& cls = r["classification"];
  o << "\nSpaces:\n";
  for (const char* key : {"trivial", "D1", "D2", "C12"}) {
    const json& m = cls["space"][key];
    o << "  " << key << ": " << (m["member"].get<bool>() ? "member" : "not a member");
    if (!m["witness"].get<std::string>().empty()) o << "  [" << m["witness"].get<std::string>() << "]";
    o << "\n";
  }
  o << "Class elimination (C4 ratio " << cls["elimination"]["c4_ratio"].get<std::string>() << "):\n";
  auto verdict = [&](const json& v) {
    o << "  " << v["name"].get<std::string>() << ": " << (v["excluded"].get<bool>() ? "excluded" : "consistent");
    if (!v["witness"].get<std::string>().empty()) o << "  [" << v["witness"].get<std::string>() << "]";
    o << "\n";
  };
  for (const auto& v : cls["elimination"]["classes"]) verdict(v);
  verdict(cls["elimination"]["D1"]);
  verdict(cls["elimination"]["D2"]);
  o << "Named structures:\n";
  for (const auto& [key, c] : cls["named"].items()) {
    o << "  " << key << " = " << c["value"].get<std::string>();
    if (!c["witness"].get<std::string>().empty()) o << "  [" << c["witness"].get<std::string>() << "]";
    if (!c["lhs"].get<std::string>().empty())
      o << "  (" << c["lhs"].get<std::string>() << " vs " << c["rhs"].get<std::string>() << ")";
    o << "\n";
  }

  o << "\nTheorem audit: " << (r["audit"]["passed"].get<bool>() ? "all pass" : "FAILED") << "\n";
  for (const auto& a : r["audit"]["items"]) {
    const bool hyp = a["hypothesis"].get<bool>();
    o << "  " << (!hyp ? "n/a " : a["passed"].get<bool>() ? "pass" : "FAIL") << "  " << a["name"].get<std::string>();
    if (!a["detail"].get<std::string>().empty()) o << "  [" << a["detail"].get<std::string>() << "]";
    o << "\n";
  }
  return o.str();
}

// ---------------------------------------------------------------------------
// Fuzzing.

namespace {

struct TrialResult {
  bool ok = true;
  bool trivial = false;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::string item;
  std::string detail;
  std::array<Rational, 6> u;
  Vector7<Rational> xi;
};

template <Scalar S>
TrialResult run_trial(const Manifold<S>& m, std::uint64_t seed, int trial) {
  TrialResult res;
  RationalSampler sampler(trial_seed(seed, static_cast<std::uint64_t>(trial)));
  res.u = sampler.stereo();
  res.xi = rational_unit_vector(res.u);
  try {
    const Instance<S> in = make_instance(m, convert<S>(res.xi));
    const ClassReport cr = classify(m, in);
    res.trivial = cr.elimination.trivial;
    for (const auto& a : cr.audit) res.hypotheses.emplace_back(a.name, a.hypothesis);
    if (const AuditItem* f = cr.first_audit_failure()) {
      res.ok = false;
      res.item = f->name;
      res.detail = f->detail;
    }
  } catch (const std::exception& e) {
    res.ok = false;
    res.item = "exception";
    res.detail = e.what();
  }
  return res;
}

template <Scalar S>
std::vector<std::optional<TrialResult>> run_trials(const Manifold<S>& m, const FuzzOptions& opts, int& first_fail_out) {
  std::vector<std::optional<TrialResult>> results(static_cast<std::size_t>(opts.trials));
  std::atomic<int> next{0};
  std::atomic<int> first_fail{opts.trials};
  auto worker = [&] {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= opts.trials || t > first_fail.load()) return;
      TrialResult r = run_trial(m, opts.seed, t);
      if (!r.ok) {
        int cur = first_fail.load();
        while (t < cur && !first_fail.compare_exchange_weak(cur, t)) {
        }
      }
      results[static_cast<std::size_t>(t)] = std::move(r);
    }
  };
  int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, opts.trials);
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  first_fail_out = first_fail.load();
  return results;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

json fuzz(const ManifoldSpec& spec, const FuzzOptions& opts) {
  if (opts.trials < 1) throw std::invalid_argument("trials must be at least 1");
  const std::string backend = resolve_backend(spec, "");

  int first_fail = opts.trials;
  std::vector<std::optional<TrialResult>> results;
  bool nearly_parallel = false;
  if (backend == "exact") {
    const auto m = make_manifold(spec.structure_constants<Rational>(), spec.g2<Rational>());
    nearly_parallel = m.nearly_parallel();
    results = run_trials(m, opts, first_fail);
  } else {
    const auto m = make_manifold(spec.structure_constants<double>(), spec.g2<double>());
    nearly_parallel = m.nearly_parallel();
    results = run_trials(m, opts, first_fail);
  }

  const int completed = std::min(first_fail + 1, opts.trials);
  int passed = 0;
  int trivial = 0;
  std::vector<std::string> order;
  std::map<std::string, int> exercised;
  std::uint64_t checksum = 0xcbf29ce484222325ULL;
  json sequence = json::array();
  for (int t = 0; t < completed; ++t) {
    const TrialResult& r = *results[static_cast<std::size_t>(t)];
    if (r.ok) ++passed;
    if (r.trivial) ++trivial;
    for (const auto& [name, hyp] : r.hypotheses) {
      if (!exercised.count(name)) order.push_back(name);
      exercised[name] += hyp ? 1 : 0;
    }
    for (const auto& x : r.xi) checksum = fnv1a(checksum, to_string(x) + ",");
    if (opts.record_xi) sequence.push_back(vec_json(r.xi));
  }

  json s = spec_header(spec, backend);
  s["trials"] = opts.trials;
  s["seed"] = opts.seed;
  s["completed"] = completed;
  s["audits_passed"] = passed;
  s["trivial"] = trivial;
  s["nearly_parallel"] = nearly_parallel;
  json hyp = json::array();
  for (const auto& name : order) hyp.push_back({{"name", name}, {"hypothesis_held", exercised[name]}});
  s["hypotheses"] = hyp;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(checksum));
  s["xi_checksum"] = hex;
  if (opts.record_xi) s["xi_sequence"] = sequence;
  if (first_fail < opts.trials) {
    const TrialResult& r = *results[static_cast<std::size_t>(first_fail)];
    json u = json::array();
    for (const auto& x : r.u) u.push_back(to_string(x));
    s["failure"] = {{"trial", first_fail},
                    {"seed", opts.seed},
                    {"trial_seed", trial_seed(opts.seed, static_cast<std::uint64_t>(first_fail))},
                    {"u", u},
                    {"xi", vec_json(r.xi)},
                    {"item", r.item},
                    {"detail", r.detail}};
  } else {
    s["failure"] = nullptr;
  }
  return s;
}

std::string render_fuzz_text(const json& s) {
  std::ostringstream o;
  o << "Fuzz: " << s["name"].get<std::string>() << " (" << s["backend"].get<std::string>() << " backend), seed "
    << s["seed"].get<std::uint64_t>() << "\n";
  o << "  trials run      " << s["completed"].get<int>() << " of " << s["trials"].get<int>() << "\n";
  o << "  audits passed   " << s["audits_passed"].get<int>() << "/" << s["completed"].get<int>() << "\n";
  o << "  trivial class   " << s["trivial"].get<int>() << "/" << s["completed"].get<int>() << "\n";
  o << "  nearly parallel " << yes_no(s["nearly_parallel"].get<bool>()) << "\n";
  o << "  xi checksum     " << s["xi_checksum"].get<std::string>() << "\n";
  o << "  hypotheses exercised:\n";
  for (const auto& h : s["hypotheses"])
    o << "  " << std::setw(6) << h["hypothesis_held"].get<int>() << "  " << h["name"].get<std::string>() << "\n";
  if (!s["failure"].is_null()) {
    const json& f = s["failure"];
    o << "AUDIT FAILURE at trial " << f["trial"].get<int>() << " (seed " << s["seed"].get<std::uint64_t>() << ", trial seed "
      << f["trial_seed"].get<std::uint64_t>() << ")\n";
    o << "  u  = " << tuple(f["u"]) << "\n  xi = " << tuple(f["xi"]) << "\n";
    o << "  " << f["item"].get<std::string>() << ": " << f["detail"].get<std::string>() << "\n";
  }
  return o.str();
}

}  // namespace g2c
