#include "g2c/classify.hpp"

#include <functional>

namespace g2c {

namespace {

constexpr int X = kDim - 1;
// Slot scan order: xi first, then f1..f6.
constexpr std::array<int, kDim> kOrder = {6, 0, 1, 2, 3, 4, 5};

// A basis vector that is +-e_k prints as such; otherwise by its adapted name.
template <Scalar S>
std::string label(const AdaptedBasis<S>& b, int a) {
  int nonzero = 0;
  for (const auto& x : b[a])
    if (!is_zero(x)) ++nonzero;
  if (nonzero == 1) {
    const std::string f = format_vector(b[a]);
    if (f.find('/') == std::string::npos && f.find('*') == std::string::npos) return f;
  }
  return a == X ? std::string("xi") : "f" + std::to_string(a + 1);
}

template <Scalar S>
std::string triple(const AdaptedBasis<S>& b, int x, int y, int z) {
  return "(" + label(b, x) + ", " + label(b, y) + ", " + label(b, z) + ")";
}

template <Scalar S>
S eta(int a) {
  return a == X ? S(1) : S(0);
}

// First adapted triple where lhs != rhs, or an empty membership on success.
template <Scalar S>
Membership scan(const CovDerivTensor<S>& t, double scale,
                const std::function<S(int, int, int)>& rhs) {
  Membership out;
  for (int x : kOrder)
    for (int y : kOrder)
      for (int z : kOrder) {
        const S& lhs = t.alpha[x][y][z];
        const S r = rhs(x, y, z);
        if (!near(lhs, r, scale)) {
          out.member = false;
          out.witness = "alpha" + triple(t.basis, x, y, z) + " = " + to_string(lhs) + ", relation requires " + to_string(r);
          return out;
        }
      }
  return out;
}

template <Scalar S>
struct Term {
  std::string label;
  S value;
};

std::string inv_name(int m) { return "i" + std::to_string(m); }

template <Scalar S>
ClassVerdict relation(std::string name, const std::vector<Term<S>>& chain, const std::vector<int>& zeros,
                      const InvariantVector<S>& inv, double scale) {
  ClassVerdict v{std::move(name), false, {}};
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!near(chain[k].value, chain[0].value, scale)) {
      v.excluded = true;
      v.witness = chain[0].label + " = " + to_string(chain[0].value) + " but " + chain[k].label + " = " +
                  to_string(chain[k].value);
      return v;
    }
  for (int m : zeros)
    if (!is_zero(inv.at(m), scale)) {
      v.excluded = true;
      v.witness = inv_name(m) + " = " + to_string(inv.at(m)) + ", relation requires 0";
      return v;
    }
  return v;
}

std::vector<int> range(int from, int to, std::initializer_list<int> extra = {}, int skip = 0) {
  std::vector<int> r(extra);
  for (int m = from; m <= to; ++m)
    if (m != skip) r.push_back(m);
  return r;
}

const std::vector<int> kSetA = {1, 2, 3, 4, 5, 7, 11, 13, 15, 16, 17, 18};

std::vector<int> with_a(std::initializer_list<int> extra) {
  std::vector<int> r(extra);
  r.insert(r.end(), kSetA.begin(), kSetA.end());
  return r;
}

template <Scalar S>
NamedCheck flag(bool value, std::string witness = {}) {
  NamedCheck c;
  c.value = value ? Tristate::yes : Tristate::no;
  c.witness = std::move(witness);
  return c;
}

std::string e(int i) { return "e" + std::to_string(i + 1); }

template <Scalar S>
std::string first_nonzero_column(const Matrix7<S>& m, const std::string& name) {
  for (int j = 0; j < kDim; ++j) {
    Vector7<S> col;
    for (int k = 0; k < kDim; ++k) col[k] = m[k][j];
    if (!is_zero(col)) return name + "(" + e(j) + ") = " + format_vector(col);
  }
  return {};
}

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes:
      return "true";
    case Tristate::no:
      return "false";
    case Tristate::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

template <Scalar S>
SpaceMembership space_membership(const CovDerivTensor<S>& t, double scale) {
  const auto& al = t.alpha;
  SpaceMembership s;
  s.trivial = scan<S>(t, scale, [](int, int, int) { return S(0); });
  s.d2 = scan<S>(t, scale, [&al](int x, int y, int z) {
    S r(0);
    if (x == X) r += al[X][y][z];
    if (y == X) r += al[x][X][z];
    if (z == X) r += al[x][y][X];
    return r;
  });
  // D1: alpha(xi, ., .) = alpha(., xi, .) = 0.
  s.d1 = scan<S>(t, scale, [&al](int x, int y, int z) { return x == X || y == X ? S(0) : al[x][y][z]; });
  s.c12 = scan<S>(t, scale, [&al](int x, int y, int z) {
    S r(0);
    if (x == X && y == X) r += al[X][X][z];
    if (x == X && z == X) r += al[X][y][X];
    return r;
  });
  return s;
}

template <Scalar S>
Elimination class_elimination(const InvariantVector<S>& inv) {
  Elimination el;
  const char* names[12] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12"};
  for (int n = 0; n < 12; ++n) el.classes[n].name = names[n];
  el.d1.name = "D1";
  el.d2.name = "D2";

  const double n2 = ScalarTraits<S>::to_double(inv.norm2);
  const double scale = n2 > 1.0 ? n2 : 1.0;
  if (is_zero(inv.norm2)) {
    el.trivial = true;
    return el;
  }

  auto i = [&inv](int m) { return inv.at(m); };
  const S N = inv.norm2;
  const S half = from_rational<S>(Rational(1, 2));
  const S sixth = from_rational<S>(Rational(1, 6));
  const S ratio = from_int<S>(kC4Ratio);
  auto neg = [](const S& x) { return S(-x); };

  using T = std::vector<Term<S>>;
  el.classes[0] = relation<S>("C1", T{{"i1", i(1)}, {"-i2", neg(i(2))}, {"-i3", neg(i(3))}, {"|alpha|^2", N}},
                              range(4, 18), inv, scale);
  el.classes[1] = relation<S>("C2", T{{"i1", i(1)}, {"2 i2", S(S(2) * i(2))}, {"-i3", neg(i(3))}, {"|alpha|^2", N}},
                              range(4, 18), inv, scale);
  el.classes[2] = relation<S>("C3", T{{"i1", i(1)}, {"i3", i(3)}, {"|alpha|^2", N}}, range(4, 18, {2}), inv, scale);
  el.classes[3] = relation<S>(
      "C4", T{{"i1", i(1)}, {"i3", i(3)}, {"r i4", S(ratio * i(4))}, {"r sum c12^2", S(ratio * inv.c12_norm2)}},
      range(5, 18, {2}), inv, scale);
  el.classes[4] = relation<S>(
      "C5", T{{"i6", i(6)}, {"-i8", neg(i(8))}, {"i9", i(9)}, {"-i12", neg(i(12))}, {"i14/6", S(sixth * i(14))}},
      with_a({10}), inv, scale);
  el.classes[5] = relation<S>(
      "C6", T{{"i6", i(6)}, {"i8", i(8)}, {"i9", i(9)}, {"i12", i(12)}, {"i10/6", S(sixth * i(10))}}, with_a({14}),
      inv, scale);
  el.classes[6] = relation<S>(
      "C7", T{{"i6", i(6)}, {"i8", i(8)}, {"i9", i(9)}, {"i12", i(12)}, {"|alpha|^2/2", S(half * N)}},
      with_a({10, 14}), inv, scale);
  el.classes[7] = relation<S>(
      "C8", T{{"i6", i(6)}, {"-i8", neg(i(8))}, {"i9", i(9)}, {"-i12", neg(i(12))}, {"|alpha|^2/2", S(half * N)}},
      with_a({10, 14}), inv, scale);
  el.classes[8] = relation<S>(
      "C9", T{{"i6", i(6)}, {"i8", i(8)}, {"-i9", neg(i(9))}, {"-i12", neg(i(12))}, {"|alpha|^2/2", S(half * N)}},
      with_a({10, 14}), inv, scale);
  el.classes[9] = relation<S>(
      "C10", T{{"i6", i(6)}, {"-i8", neg(i(8))}, {"-i9", neg(i(9))}, {"i12", i(12)}, {"|alpha|^2/2", S(half * N)}},
      with_a({10, 14}), inv, scale);
  el.classes[10] = relation<S>("C11", T{{"i5", i(5)}, {"|alpha|^2", N}}, range(1, 18, {}, 5), inv, scale);
  el.classes[11] = relation<S>("C12", T{{"i16", i(16)}, {"|alpha|^2/2", S(half * N)}}, range(1, 18, {}, 16), inv, scale);

  el.d1 = relation<S>("D1", T{}, range(5, 18), inv, scale);
  el.d2 = relation<S>("D2", T{}, {1, 2, 3, 4, 16, 17, 18}, inv, scale);
  return el;
}

template <Scalar S>
NamedResults named_checks(const Manifold<S>& m, const Instance<S>& in) {
  NamedResults r;
  const double scale = in.scale();
  const auto& al = in.tensor.alpha;
  const Vector7<S>& xi = in.acms.xi;

  r.cosymplectic = flag<S>(is_zero(in.inv.norm2), is_zero(in.inv.norm2) ? "" : "|alpha|^2 = " + to_string(in.inv.norm2));

  const Matrix7<S> nxp = nabla_xi_phi(m.conn, m.g2, in.acms);
  r.almost_k_contact = flag<S>(is_zero(nxp), first_nonzero_column(nxp, "(nabla_xi phi)"));

  std::string w;
  for (int y : kOrder)
    for (int z : kOrder)
      if (w.empty() && !is_zero(al[X][y][z], scale))
        w = "(nabla_xi Phi)(" + label(in.basis, y) + ", " + label(in.basis, z) + ") = " + to_string(al[X][y][z]);
  r.nabla_xi_Phi_zero = flag<S>(w.empty(), w);

  const Vector7<S> dPhi = codifferential_phi_frame(in.tensor);
  {
    std::string why;
    for (int x = 0; x < kDim && why.empty(); ++x)
      if (!is_zero(dPhi[x], scale)) why = "delta Phi(" + e(x) + ") = " + to_string(dPhi[x]);
    if (why.empty() && !is_zero(in.diag.delta_eta)) why = "delta eta = " + to_string(in.diag.delta_eta);
    r.semi_cosymplectic = flag<S>(why.empty(), why);
  }

  {
    std::string why;
    for (int i = 0; i < kDim && why.empty(); ++i) {
      const Matrix7<S> np = nabla_phi_endomorphism(m.conn, m.g2, in.acms, basis_vector<S>(i));
      for (int j = 0; j < kDim && why.empty(); ++j) {
        Vector7<S> lhs, rhs;
        for (int k = 0; k < kDim; ++k) {
          lhs[k] = np[k][j];
          rhs[k] = (i == j ? xi[k] : S(0)) - (k == i ? xi[j] : S(0));
        }
        if (!is_zero(Vector7<S>(lhs - rhs)))
          why = "(" + e(i) + "," + e(j) + "): (nabla_x phi)(y) = " + format_vector(lhs) +
                ", g(x,y) xi - eta(y) x = " + format_vector(rhs);
      }
    }
    r.sasakian = flag<S>(why.empty(), why);
  }

  if (!is_zero(in.diag.delta_eta)) {
    r.trans_sasakian_necessary.value = Tristate::indeterminate;
    r.trans_sasakian_necessary.witness = "delta eta = " + to_string(in.diag.delta_eta) + " != 0";
  } else {
    const S beta = codifferential_phi(in.tensor)[X] / S(6);
    r.trans_sasakian_necessary.value = Tristate::yes;
    for (int x : kOrder)
      for (int y : kOrder)
        for (int z : kOrder) {
          if (r.trans_sasakian_necessary.value != Tristate::yes) continue;
          S rhs(0);
          if (x == z) rhs += eta<S>(y);
          if (x == y) rhs -= eta<S>(z);
          rhs *= beta;
          if (!near(al[x][y][z], rhs, scale)) {
            auto& c = r.trans_sasakian_necessary;
            c.value = Tristate::no;
            c.witness = "alpha" + triple(in.basis, x, y, z);
            c.lhs = to_string(al[x][y][z]);
            c.rhs = to_string(rhs);
          }
        }
  }

  const bool obstruction = in.diag.is_killing && !in.diag.xi_parallel;
  r.nearly_k_cosymplectic_obstruction =
      flag<S>(obstruction, obstruction ? "xi is Killing and nabla xi != 0, so not C1" : "");
  return r;
}

template <Scalar S>
std::vector<AuditItem> theorem_audit(const Manifold<S>& m, const Instance<S>& in, const SpaceMembership& space,
                                     const Elimination& el, const NamedResults& named) {
  std::vector<AuditItem> out;
  auto add = [&out](std::string name, bool hypothesis, bool conclusion, std::string detail = {}) {
    const bool failed = hypothesis && !conclusion;
    out.push_back({std::move(name), hypothesis, !failed, failed ? std::move(detail) : std::string()});
  };
  const auto& inv = in.inv;
  const auto& d = in.diag;
  const double scale = in.scale();
  const Vector7<S>& xi = in.acms.xi;
  auto zero = [scale](const S& x) { return is_zero(x, scale); };
  auto excluded = [&el](std::initializer_list<int> classes, bool d1, bool d2, std::string& why) {
    if (el.trivial) {
      why = "alpha = 0";
      return false;
    }
    for (int c : classes)
      if (!el.c(c).excluded) {
        why = el.c(c).name + " not excluded";
        return false;
      }
    if (d1 && !el.d1.excluded) {
      why = "D1 not excluded";
      return false;
    }
    if (d2 && !el.d2.excluded) {
      why = "D2 not excluded";
      return false;
    }
    return true;
  };

  const bool nxx_zero = is_zero(d.nabla_xi_xi);
  bool f_parallel = true;
  for (int a = 0; a < kDim - 1; ++a)
    if (!is_zero(m.conn.nabla(in.basis[a], xi))) f_parallel = false;

  add("i6 = 0 iff nabla_{f_i} xi = 0", true, zero(inv.at(6)) == f_parallel,
      "i6 = " + to_string(inv.at(6)));
  add("i16 = 0 iff nabla_xi xi = 0", true, zero(inv.at(16)) == nxx_zero,
      "i16 = " + to_string(inv.at(16)) + ", nabla_xi xi = " + format_vector(d.nabla_xi_xi));

  {
    std::string why;
    for (int i = 0; i < kDim && why.empty(); ++i)
      for (int k = 0; k < kDim && why.empty(); ++k) {
        const S lhs = in.tensor.on_frame(basis_vector<S>(i), xi, basis_vector<S>(k));
        const S rhs = -dot(d.nabla_xi[i], in.acms.phi(basis_vector<S>(k)));
        if (!near(lhs, rhs, scale)) why = "(" + e(i) + "," + e(k) + "): " + to_string(lhs) + " vs " + to_string(rhs);
      }
    add("(nabla_{e_i} Phi)(xi, e_k) = -g(nabla_{e_i} xi, xi x e_k)", true, why.empty(), why);
  }

  const S div2 = d.div_xi * d.div_xi;
  add("i14 = div(xi)^2", true, near(inv.at(14), div2, scale),
      "i14 = " + to_string(inv.at(14)) + ", div^2 = " + to_string(div2));
  const S i15 = -d.div_xi * d.g_xi_v;
  add("i15 = -div(xi) g(xi, v)", true, near(inv.at(15), i15, scale),
      "i15 = " + to_string(inv.at(15)) + ", expected " + to_string(i15));

  const bool np = m.nearly_parallel();
  add("i5 = 0 iff nabla_xi xi = 0", np, zero(inv.at(5)) == nxx_zero,
      "i5 = " + to_string(inv.at(5)) + ", nabla_xi xi = " + format_vector(d.nabla_xi_xi));
  const S i17 = dot(cross(m.g2, xi, d.nabla_xi_xi), d.v);
  add("i17 = g(xi x nabla_xi xi, v)", np, near(inv.at(17), i17, scale),
      "i17 = " + to_string(inv.at(17)) + ", expected " + to_string(i17));
  const S i18 = -dot(d.nabla_xi_xi, d.v);
  add("i18 = -g(nabla_xi xi, v)", np, near(inv.at(18), i18, scale),
      "i18 = " + to_string(inv.at(18)) + ", expected " + to_string(i18));

  const S gv2 = d.g_xi_v * d.g_xi_v;
  add("i10 = g(v, xi)^2", true, near(inv.at(10), gv2, scale),
      "i10 = " + to_string(inv.at(10)) + ", g(v,xi)^2 = " + to_string(gv2));
  add("delta eta = -div(xi)", true, near(d.delta_eta, S(-d.div_xi)),
      "delta eta = " + to_string(d.delta_eta) + ", div = " + to_string(d.div_xi));

  {
    std::string why;
    for (int i = 0; i < kDim && why.empty(); ++i) {
      const S g = dot(d.nabla_xi[i], xi);
      if (!is_zero(g)) why = "g(nabla_" + e(i) + " xi, xi) = " + to_string(g);
    }
    add("g(nabla_x xi, xi) = 0", true, why.empty(), why);
  }

  for (const auto& item : validate_tensor(in.tensor, in.acms).items)
    add("alpha: " + item.name, true, item.passed, item.witness);
  {
    const CheckReport acms = validate_acms(in.acms);
    const CheckItem* f = acms.first_failure();
    add("ACMS axioms", true, f == nullptr, f ? f->name + ": " + f->witness : "");
  }

  {
    const S c = from_rational<S>(Rational(3, 5));
    const S s = from_rational<S>(Rational(4, 5));
    CovDerivTensor<S> rotated;
    rotated.basis = rotate_first_pair(in.basis, c, s);
    rotated.frame = in.tensor.frame;
    rotated.alpha = change_basis(in.tensor.frame, rotated.basis);
    const InvariantVector<S> other = quadratic_invariants(rotated, in.acms);
    std::string why;
    for (int k = 1; k <= 18 && why.empty(); ++k)
      if (!near(inv.at(k), other.at(k), scale))
        why = inv_name(k) + ": " + to_string(inv.at(k)) + " vs " + to_string(other.at(k)) + " after rotating (f1,f2)";
    if (why.empty() && !near(inv.norm2, other.norm2, scale)) why = "|alpha|^2 changed after rotating (f1,f2)";
    add("invariants independent of the adapted basis", true, why.empty(), why);
  }

  {
    const KForm<S> deta = ce_differential(m.sc, KForm<S>::one_form(xi));
    add("Killing: d eta = 0 iff nabla xi = 0", d.is_killing, deta.is_zero() == d.xi_parallel,
        "d eta = " + deta.to_string() + ", nabla xi parallel = " + (d.xi_parallel ? "true" : "false"));
    add("Killing and nabla xi != 0: not C1", d.is_killing && !d.xi_parallel, !el.trivial && el.c(1).excluded,
        el.trivial ? "alpha = 0" : "C1 not excluded");
  }

  std::string why;
  bool ok = excluded({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, false, true, why);
  add("nabla_xi xi != 0 excludes D2, C1..C11", !nxx_zero, ok, why);

  ok = excluded({1, 2, 3, 4, 6, 7, 8, 9, 10, 11, 12}, true, false, why);
  if (ok && named.semi_cosymplectic.holds()) {
    ok = false;
    why = "semi-cosymplectic";
  }
  add("div(xi) != 0 excludes D1, C1..C4, C6..C12 and semi-cosymplectic", !is_zero(d.div_xi), ok, why);

  ok = excluded({12}, true, true, why);
  add("nearly parallel, nabla_xi xi != 0 excludes D1, D2, C12", np && !nxx_zero, ok, why);

  add("nearly parallel, nabla_xi xi = 0 iff almost-K-contact", np,
      nxx_zero == named.almost_k_contact.holds(),
      std::string("nabla_xi xi = 0: ") + (nxx_zero ? "true" : "false") +
          ", almost-K-contact: " + to_string(named.almost_k_contact.value));

  ok = excluded({5, 7, 8, 9, 10, 11, 12}, true, false, why);
  add("g(xi, v) != 0 excludes D1, C5, C7..C12", !is_zero(d.g_xi_v), ok, why);

  ok = excluded({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, false, false, why);
  add("g(xi, v) != 0 and div(xi) != 0 exclude C1..C12", !is_zero(d.g_xi_v) && !is_zero(d.div_xi), ok, why);

  {
    std::string w;
    for (int k = 5; k <= 18 && w.empty(); ++k)
      if (!zero(inv.at(k))) w = inv_name(k) + " = " + to_string(inv.at(k));
    add("D1 member => i_m = 0 for m >= 5", space.d1.member, w.empty(), w);
    w.clear();
    for (int k : {1, 2, 3, 4, 16, 17, 18})
      if (w.empty() && !zero(inv.at(k))) w = inv_name(k) + " = " + to_string(inv.at(k));
    add("D2 member => i_m = 0 for m = 1..4, 16..18", space.d2.member, w.empty(), w);
  }

  add("semi-cosymplectic => delta eta = 0 => i14 = 0", named.semi_cosymplectic.holds(),
      is_zero(d.delta_eta) && zero(inv.at(14)), "i14 = " + to_string(inv.at(14)));

  {
    bool all_zero = is_zero(inv.norm2);
    for (int k = 1; k <= 18; ++k) all_zero = all_zero && is_zero(inv.at(k), scale);
    add("cosymplectic iff all invariants and |alpha|^2 vanish", true, named.cosymplectic.holds() == all_zero,
        "cosymplectic = " + to_string(named.cosymplectic.value));
    add("trivial space iff cosymplectic", true, space.trivial.member == named.cosymplectic.holds(), space.trivial.witness);
  }

  add("almost-K-contact: nabla_xi phi = 0 iff nabla_xi Phi = 0", true,
      named.almost_k_contact.holds() == named.nabla_xi_Phi_zero.holds(),
      named.almost_k_contact.witness + " / " + named.nabla_xi_Phi_zero.witness);
  return out;
}

bool ClassReport::audit_ok() const { return first_audit_failure() == nullptr; }

const AuditItem* ClassReport::first_audit_failure() const {
  for (const auto& a : audit)
    if (!a.passed) return &a;
  return nullptr;
}

template <Scalar S>
ClassReport classify(const Manifold<S>& m, const Instance<S>& in) {
  ClassReport r;
  r.space = space_membership(in.tensor, in.scale());
  r.elimination = class_elimination(in.inv);
  r.named = named_checks(m, in);
  r.audit = theorem_audit(m, in, r.space, r.elimination, r.named);
  return r;
}

void require_consistent(const ClassReport& report) {
  if (const AuditItem* f = report.first_audit_failure())
    throw InternalConsistencyError("audit failed: " + f->name + (f->detail.empty() ? "" : " (" + f->detail + ")"));
}

#define G2C_INSTANTIATE_CLASSIFY(S)                                                                       \
  template SpaceMembership space_membership<S>(const CovDerivTensor<S>&, double);                         \
  template Elimination class_elimination<S>(const InvariantVector<S>&);                                   \
  template NamedResults named_checks<S>(const Manifold<S>&, const Instance<S>&);                          \
  template std::vector<AuditItem> theorem_audit<S>(const Manifold<S>&, const Instance<S>&,                \
                                                   const SpaceMembership&, const Elimination&,            \
                                                   const NamedResults&);                                  \
  template ClassReport classify<S>(const Manifold<S>&, const Instance<S>&);

G2C_INSTANTIATE_CLASSIFY(Rational)
G2C_INSTANTIATE_CLASSIFY(double)

}  // namespace g2c
