#include "g2c/frame.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace g2c {

namespace {

std::string triple_label(int i, int j, int k) {
  return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")";
}

// Increasing 0-based indices of a mask.
int mask_indices(Mask m, std::array<int, kDim>& out) {
  int n = 0;
  for (int p = 0; p < kDim; ++p)
    if (m >> p & 1) out[n++] = p;
  return n;
}

}  // namespace

template <Scalar S>
StructureConstants<S> StructureConstants<S>::from_brackets(const std::vector<Bracket>& brackets) {
  StructureConstants sc;
  for (const auto& b : brackets) {
    if (b.i < 0 || b.i >= kDim || b.j < 0 || b.j >= kDim || b.k < 0 || b.k >= kDim)
      throw ValidationError("bracket index out of range");
    if (b.i == b.j) throw ValidationError("bracket [e" + std::to_string(b.i + 1) + ",e" + std::to_string(b.j + 1) + "] has equal indices");
    sc.c[b.i][b.j][b.k] += b.value;
    sc.c[b.j][b.i][b.k] -= b.value;
  }
  return sc;
}

template <Scalar S>
Vector7<S> StructureConstants<S>::bracket(const Vector7<S>& x, const Vector7<S>& y) const {
  Vector7<S> r = zero_vector<S>();
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < kDim; ++j) {
      if (is_zero(y[j])) continue;
      const S xy = x[i] * y[j];
      for (int k = 0; k < kDim; ++k) r[k] += xy * c[i][j][k];
    }
  }
  return r;
}

template <Scalar S>
Vector7<S> Connection<S>::nabla(const Vector7<S>& x, const Vector7<S>& w) const {
  Vector7<S> r = zero_vector<S>();
  for (int i = 0; i < kDim; ++i) {
    if (is_zero(x[i])) continue;
    for (int m = 0; m < kDim; ++m) {
      if (is_zero(w[m])) continue;
      const S xw = x[i] * w[m];
      for (int k = 0; k < kDim; ++k) r[k] += xw * gamma[i][m][k];
    }
  }
  return r;
}

template <Scalar S>
CheckReport validate_structure(const StructureConstants<S>& sc) {
  CheckReport report;
  const auto& c = sc.c;

  CheckItem anti{"antisymmetry", true, {}};
  for (int i = 0; i < kDim && anti.passed; ++i)
    for (int j = 0; j < kDim && anti.passed; ++j)
      for (int k = 0; k < kDim; ++k) {
        const S sum = c[i][j][k] + c[j][i][k];
        if (!is_zero(sum)) {
          anti.passed = false;
          anti.witness = "c[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" + std::to_string(k + 1) +
                         "] + c[" + std::to_string(j + 1) + "][" + std::to_string(i + 1) + "][" + std::to_string(k + 1) +
                         "] = " + to_string(sum);
          break;
        }
      }
  report.items.push_back(anti);

  CheckItem jacobi{"jacobi", true, {}};
  for (int i = 0; i < kDim && jacobi.passed; ++i)
    for (int j = i + 1; j < kDim && jacobi.passed; ++j)
      for (int k = j + 1; k < kDim; ++k) {
        const auto ei = basis_vector<S>(i), ej = basis_vector<S>(j), ek = basis_vector<S>(k);
        const Vector7<S> sum = sc.bracket(sc.bracket(ei, ej), ek) + sc.bracket(sc.bracket(ej, ek), ei) +
                               sc.bracket(sc.bracket(ek, ei), ej);
        if (!is_zero(sum)) {
          jacobi.passed = false;
          jacobi.witness = triple_label(i, j, k) + ": [[x,y],z] + [[y,z],x] + [[z,x],y] = " + format_vector(sum);
          break;
        }
      }
  report.items.push_back(jacobi);
  return report;
}

template <Scalar S>
Connection<S> levi_civita(const StructureConstants<S>& sc) {
  Connection<S> conn;
  const auto& c = sc.c;
  const S half = from_rational<S>(Rational(1, 2));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        S v = c[i][j][k] - c[j][k][i] + c[k][i][j];
        conn.gamma[i][j][k] = half * v;
      }
  return conn;
}

template <Scalar S>
CheckReport validate_connection(const StructureConstants<S>& sc, const Connection<S>& conn) {
  CheckReport report;
  CheckItem metric{"metric compatibility", true, {}};
  CheckItem torsion{"torsion free", true, {}};
  const auto& g = conn.gamma;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      for (int k = 0; k < kDim; ++k) {
        const S m = g[i][j][k] + g[i][k][j];
        if (metric.passed && !is_zero(m)) {
          metric.passed = false;
          metric.witness = triple_label(i, j, k) + ": gamma_ijk + gamma_ikj = " + to_string(m);
        }
        const S t = g[i][j][k] - g[j][i][k] - sc.c[i][j][k];
        if (torsion.passed && !is_zero(t)) {
          torsion.passed = false;
          torsion.witness = triple_label(i, j, k) + ": gamma_ijk - gamma_jik - c_ijk = " + to_string(t);
        }
      }
  report.items = {metric, torsion};
  return report;
}

template <Scalar S>
KForm<S> ce_differential(const StructureConstants<S>& sc, const KForm<S>& w) {
  const int k = w.degree();
  if (k >= kDim) throw std::invalid_argument("exterior derivative of a top-degree form");
  KForm<S> r(k + 1);
  std::array<int, kDim> J{};
  std::array<int, kDim> args{};
  for (int mi = 0; mi < kMaskCount; ++mi) {
    const Mask m = static_cast<Mask>(mi);
    if (mask_degree(m) != k + 1) continue;
    mask_indices(m, J);
    S total(0);
    for (int a = 0; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        int n = 1;
        for (int t = 0; t <= k; ++t)
          if (t != a && t != b) args[n++] = J[t];
        const bool negative = (a + b) % 2 != 0;
        for (int l = 0; l < kDim; ++l) {
          const S& cl = sc.c[J[a]][J[b]][l];
          if (is_zero(cl)) continue;
          args[0] = l;
          const S term = cl * w.on_basis(std::span<const int>(args.data(), static_cast<std::size_t>(k)));
          if (negative)
            total -= term;
          else
            total += term;
        }
      }
    r[m] = total;
  }
  return r;
}

template <Scalar S>
KForm<S> nabla_form(const Connection<S>& conn, const KForm<S>& w, int i) {
  const int k = w.degree();
  KForm<S> r(k);
  if (k == 0) return r;
  std::array<int, kDim> J{};
  std::array<int, kDim> args{};
  for (int mi = 0; mi < kMaskCount; ++mi) {
    const Mask m = static_cast<Mask>(mi);
    if (mask_degree(m) != k) continue;
    mask_indices(m, J);
    S total(0);
    for (int p = 0; p < k; ++p) {
      for (int l = 0; l < kDim; ++l) {
        const S& gl = conn.gamma[i][J[p]][l];
        if (is_zero(gl)) continue;
        for (int t = 0; t < k; ++t) args[t] = J[t];
        args[p] = l;
        total -= gl * w.on_basis(std::span<const int>(args.data(), static_cast<std::size_t>(k)));
      }
    }
    r[m] = total;
  }
  return r;
}

template <Scalar S>
KForm<S> antisymmetrized_nabla(const Connection<S>& conn, const KForm<S>& w) {
  const int k = w.degree();
  KForm<S> r(k + 1);
  std::array<KForm<S>, kDim> nw;
  for (int i = 0; i < kDim; ++i) nw[i] = nabla_form(conn, w, i);
  std::array<int, kDim> J{};
  std::array<int, kDim> rest{};
  for (int mi = 0; mi < kMaskCount; ++mi) {
    const Mask m = static_cast<Mask>(mi);
    if (mask_degree(m) != k + 1) continue;
    mask_indices(m, J);
    S total(0);
    for (int a = 0; a <= k; ++a) {
      int n = 0;
      for (int t = 0; t <= k; ++t)
        if (t != a) rest[n++] = J[t];
      const S v = nw[J[a]].on_basis(std::span<const int>(rest.data(), static_cast<std::size_t>(k)));
      if (a % 2 == 0)
        total += v;
      else
        total -= v;
    }
    r[m] = total;
  }
  return r;
}

template <Scalar S>
S divergence(const Connection<S>& conn, const Vector7<S>& x) {
  S total(0);
  for (int i = 0; i < kDim; ++i)
    for (int m = 0; m < kDim; ++m)
      if (!is_zero(x[m])) total += x[m] * conn.gamma[i][m][i];
  return total;
}

template <Scalar S>
G2ClassProbe<S> g2_class_probe(const StructureConstants<S>& sc, const Connection<S>& conn, const G2Structure<S>& g2) {
  G2ClassProbe<S> probe;
  probe.parallel = true;
  for (int i = 0; i < kDim && probe.parallel; ++i)
    if (!nabla_form(conn, g2.phi(), i).is_zero()) probe.parallel = false;

  probe.dphi = ce_differential(sc, g2.phi());
  probe.star_phi = hodge_star(g2.phi());
  const auto& d = probe.dphi;
  const auto& s = probe.star_phi;

  // Candidate k: the ratio d phi / star phi shared by the most components
  // (first one on ties). Only an exact fit is accepted below.
  std::vector<S> ratios;
  for (int m = 0; m < kMaskCount; ++m) {
    const Mask mm = static_cast<Mask>(m);
    if (mask_degree(mm) == 4 && !is_zero(s[mm])) ratios.push_back(d[mm] / s[mm]);
  }
  if (ratios.empty()) return probe;
  std::size_t best = 0;
  int best_count = 0;
  for (std::size_t r = 0; r < ratios.size(); ++r) {
    int count = 0;
    for (const auto& q : ratios)
      if (near(q, ratios[r])) ++count;
    if (count > best_count) {
      best_count = count;
      best = r;
    }
  }
  const S k = ratios[best];
  probe.candidate_k = k;
  probe.matching_components = best_count;
  probe.star_components = static_cast<int>(ratios.size());
  const double star_norm = std::sqrt(ScalarTraits<S>::to_double(s.norm2()));
  S residual2(0);
  for (int m = 0; m < kMaskCount; ++m) {
    const Mask mm = static_cast<Mask>(m);
    if (mask_degree(mm) != 4) continue;
    const S diff = d[mm] - k * s[mm];
    residual2 += diff * diff;
    if (!is_zero(diff, star_norm))
      probe.mismatches.push_back("e^" + mask_label(mm) + ": dphi = " + to_string(d[mm]) + ", star phi = " + to_string(s[mm]));
  }
  bool proportional;
  if constexpr (ScalarTraits<S>::exact)
    proportional = is_zero(residual2);
  else
    proportional = std::sqrt(residual2) <= tolerance() * star_norm;
  if (proportional) {
    probe.nearly_parallel = k;
    probe.mismatches.clear();
  }
  return probe;
}

template <Scalar S>
std::string format_connection(const Connection<S>& conn) {
  std::ostringstream os;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      const Vector7<S>& v = conn.gamma[i][j];
      if (is_zero(v)) continue;
      os << "nabla_e" << i + 1 << " e" << j + 1 << " = " << format_vector(v) << "\n";
    }
  return os.str();
}

#define G2C_INSTANTIATE_FRAME(S)                                                                             \
  template struct StructureConstants<S>;                                                                     \
  template struct Connection<S>;                                                                             \
  template CheckReport validate_structure<S>(const StructureConstants<S>&);                                  \
  template Connection<S> levi_civita<S>(const StructureConstants<S>&);                                       \
  template CheckReport validate_connection<S>(const StructureConstants<S>&, const Connection<S>&);           \
  template KForm<S> ce_differential<S>(const StructureConstants<S>&, const KForm<S>&);                       \
  template KForm<S> nabla_form<S>(const Connection<S>&, const KForm<S>&, int);                               \
  template KForm<S> antisymmetrized_nabla<S>(const Connection<S>&, const KForm<S>&);                         \
  template S divergence<S>(const Connection<S>&, const Vector7<S>&);                                         \
  template G2ClassProbe<S> g2_class_probe<S>(const StructureConstants<S>&, const Connection<S>&,             \
                                             const G2Structure<S>&);                                         \
  template std::string format_connection<S>(const Connection<S>&);

G2C_INSTANTIATE_FRAME(Rational)
G2C_INSTANTIATE_FRAME(double)

}  // namespace g2c
