#pragma once

// Shared fixtures and independent oracles for the unit tests.

#include <functional>
#include <random>
#include <string>

#include "g2c/classify.hpp"
#include "g2c/random.hpp"
#include "g2c/spec.hpp"

namespace g2c::test {

using Q = Rational;
using V = Vector7<Q>;

inline Q q(long p, long d = 1) {
  Q r(p, d);
  r.canonicalize();
  return r;
}

inline V vec(std::initializer_list<long> xs) {
  V v = zero_vector<Q>();
  int i = 0;
  for (long x : xs) v[i++] = Q(x);
  return v;
}

inline V e(int i) { return basis_vector<Q>(i - 1); }

template <Scalar S = Q>
Manifold<S> manifold(const std::string& name) {
  const ManifoldSpec s = builtin_example(name);
  return make_manifold(s.structure_constants<S>(), s.g2<S>());
}

inline V random_unit(std::uint64_t seed) {
  RationalSampler s(seed);
  return rational_unit_vector(s.stereo());
}

/// The 18 invariants summed literally from their defining formulas, with
/// phi applied to vectors and alpha evaluated through operator(). Index 0 is
/// unused so that lit[m] is i_m.
template <Scalar S>
std::array<S, 19> literal_invariants(const CovDerivTensor<S>& t, const Matrix7<S>& P) {
  const int X = 6;
  std::array<Vector7<S>, kDim> b;
  std::array<Vector7<S>, kDim> pb;
  for (int a = 0; a < kDim; ++a) {
    b[a] = basis_vector<S>(a);
    for (int c = 0; c < kDim; ++c) pb[a][c] = P[a][c];
  }
  auto al = [&](const Vector7<S>& x, const Vector7<S>& y, const Vector7<S>& z) { return t(x, y, z); };
  std::array<S, 19> i;
  i.fill(S(0));
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c)
      for (int k = 0; k < 6; ++k) {
        i[1] += al(b[a], b[c], b[k]) * al(b[a], b[c], b[k]);
        i[2] += al(b[a], b[c], b[k]) * al(b[c], b[a], b[k]);
        i[3] += al(b[a], b[c], b[k]) * al(pb[a], pb[c], b[k]);
        i[4] += al(b[a], b[a], b[k]) * al(b[c], b[c], b[k]);
      }
  for (int j = 0; j < 6; ++j)
    for (int k = 0; k < 6; ++k) {
      i[5] += al(b[X], b[j], b[k]) * al(b[X], b[j], b[k]);
      i[6] += al(b[j], b[X], b[k]) * al(b[j], b[X], b[k]);
      i[7] += al(b[X], b[j], b[k]) * al(b[j], b[X], b[k]);
      i[8] += al(b[j], b[k], b[X]) * al(b[k], b[j], b[X]);
      i[9] += al(b[j], b[k], b[X]) * al(pb[j], pb[k], b[X]);
      i[10] += al(b[j], b[j], b[X]) * al(b[k], b[k], b[X]);
      i[11] += al(b[j], b[k], b[X]) * al(b[k], pb[j], b[X]);
      i[12] += al(b[j], b[k], b[X]) * al(pb[k], pb[j], b[X]);
      i[13] += al(b[X], b[j], b[k]) * al(pb[j], b[X], b[k]);
      i[14] += al(b[j], pb[j], b[X]) * al(b[k], pb[k], b[X]);
      i[15] += al(b[j], pb[j], b[X]) * al(b[k], b[k], b[X]);
      i[17] += al(b[j], b[j], b[k]) * al(b[X], b[X], b[k]);
      i[18] += al(b[j], b[j], pb[k]) * al(b[X], b[X], b[k]);
    }
  for (int k = 0; k < 6; ++k) i[16] += al(b[X], b[X], b[k]) * al(b[X], b[X], b[k]);
  return i;
}

// ---------------------------------------------------------------------------
// Pure class tensors on the model structure phi_0 with xi = e7, where the
// adapted basis is the frame itself. Each is built from its defining
// symmetries, independently of the invariant relations it is tested against.

using Tri = std::function<Q(const V&, const V&, const V&)>;
using Bi = std::function<Q(const V&, const V&)>;

struct Model {
  G2Structure<Q> g2 = standard_phi<Q>();
  V xi = e(7);
  ACMS<Q> acms = induce_acms(g2, xi);
  AdaptedBasis<Q> basis = adapted_basis(xi);

  V phi(const V& x) const { return acms.phi(x); }
  Q eta(const V& x) const { return x[6]; }
  /// g restricted to xi-perp.
  Q gp(const V& x, const V& y) const { return dot(x, y) - eta(x) * eta(y); }

  Tensor3<Q> build(const Tri& f) const {
    Tensor3<Q> t = zero_tensor<Q>();
    for (int a = 0; a < kDim; ++a)
      for (int b = 0; b < kDim; ++b)
        for (int c = 0; c < kDim; ++c) t[a][b][c] = f(e(a + 1), e(b + 1), e(c + 1));
    return t;
  }

  static Tri eval(Tensor3<Q> t) {
    return [t](const V& x, const V& y, const V& z) -> Q {
      Q s = 0;
      for (int a = 0; a < kDim; ++a) {
        if (sgn(x[a]) == 0) continue;
        for (int b = 0; b < kDim; ++b) {
          if (sgn(y[b]) == 0) continue;
          for (int c = 0; c < kDim; ++c)
            if (sgn(z[c]) != 0) s += x[a] * y[b] * z[c] * t[a][b][c];
        }
      }
      return s;
    };
  }

  CovDerivTensor<Q> tensor(const Tensor3<Q>& t) const {
    CovDerivTensor<Q> c;
    c.alpha = t;
    c.frame = t;
    c.basis = basis;
    return c;
  }

  /// A tensor of the given class C1..C12, with small integer seeds from `seed`.
  CovDerivTensor<Q> pure(int cls, unsigned seed = 7) const {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    auto rnd = [&]() -> Q { return Q(dist(gen)); };

    if (cls >= 1 && cls <= 4) {
      // Random element of D1: antisymmetrise in (y,z), then impose the C-space symmetry.
      Tensor3<Q> raw = zero_tensor<Q>();
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          for (int c = 0; c < 6; ++c) raw[a][b][c] = rnd();
      const Tri r = eval(raw);
      const Tri t0 = [r](const V& x, const V& y, const V& z) -> Q { return r(x, y, z) - r(x, z, y); };
      const Tri t1 = eval(build([&](const V& x, const V& y, const V& z) -> Q { return t0(x, y, z) - t0(x, phi(y), phi(z)); }));
      // W1+W2: alpha(phi x, phi y, z) = -alpha(x, y, z); W3+W4: = +alpha.
      const Tri a12 = eval(build([&](const V& x, const V& y, const V& z) -> Q { return (t1(x, y, z) - t1(phi(x), phi(y), z)) / 2; }));
      const Tri a34 = eval(build([&](const V& x, const V& y, const V& z) -> Q { return (t1(x, y, z) + t1(phi(x), phi(y), z)) / 2; }));
      const Tri c1 = eval(build([&](const V& x, const V& y, const V& z) -> Q { return (a12(x, y, z) + a12(y, z, x) + a12(z, x, y)) / 3; }));
      if (cls == 1) return tensor(build(c1));
      if (cls == 2) return tensor(build([&](const V& x, const V& y, const V& z) -> Q { return a12(x, y, z) - c1(x, y, z); }));
      // Lee-form part from the trace c12(z) = sum_a alpha(f_a, f_a, z).
      V c12 = zero_vector<Q>();
      for (int k = 0; k < kDim; ++k)
        for (int a = 0; a < 6; ++a) c12[k] += a34(e(a + 1), e(a + 1), e(k + 1));
      auto th = [&](const V& u) -> Q { return dot(c12, u) / 4; };
      const Tri c4 = eval(build([&](const V& x, const V& y, const V& z) -> Q {
        return gp(x, y) * th(z) - gp(x, z) * th(y) - dot(x, phi(y)) * th(phi(z)) + dot(x, phi(z)) * th(phi(y));
      }));
      if (cls == 4) return tensor(build(c4));
      return tensor(build([&](const V& x, const V& y, const V& z) -> Q { return a34(x, y, z) - c4(x, y, z); }));
    }

    if (cls >= 5 && cls <= 10) {
      // alpha(x,y,z) = eta(z) beta(x,y) - eta(y) beta(x,z), beta on xi-perp.
      Matrix7<Q> braw = zero_matrix<Q>();
      for (int a = 0; a < 6; ++a)
        for (int c = 0; c < 6; ++c) braw[a][c] = rnd();
      const Bi beta = [braw](const V& x, const V& y) -> Q {
        Q s = 0;
        for (int a = 0; a < 6; ++a)
          for (int c = 0; c < 6; ++c) s += x[a] * y[c] * braw[a][c];
        return s;
      };
      auto sym = [](Bi f) -> Bi { return [f](const V& x, const V& y) -> Q { return (f(x, y) + f(y, x)) / 2; }; };
      auto asym = [](Bi f) -> Bi { return [f](const V& x, const V& y) -> Q { return (f(x, y) - f(y, x)) / 2; }; };
      auto inv = [this](Bi f) -> Bi { return [f, this](const V& x, const V& y) -> Q { return (f(x, y) + f(phi(x), phi(y))) / 2; }; };
      auto ainv = [this](Bi f) -> Bi { return [f, this](const V& x, const V& y) -> Q { return (f(x, y) - f(phi(x), phi(y))) / 2; }; };
      Bi chosen;
      switch (cls) {
        case 5:
          chosen = [this](const V& x, const V& y) -> Q { return dot(x, phi(y)); };
          break;
        case 6:
          chosen = [this](const V& x, const V& y) -> Q { return gp(x, y); };
          break;
        case 7: {
          const Bi si = inv(sym(beta));
          Q tr = 0;
          for (int a = 0; a < 6; ++a) tr += si(e(a + 1), e(a + 1));
          chosen = [si, tr, this](const V& x, const V& y) -> Q { return si(x, y) - tr / 6 * gp(x, y); };
          break;
        }
        case 8: {
          const Bi ai = inv(asym(beta));
          Q trp = 0;
          for (int a = 0; a < 6; ++a) trp += ai(e(a + 1), phi(e(a + 1)));
          chosen = [ai, trp, this](const V& x, const V& y) -> Q { return ai(x, y) + trp / 6 * dot(x, phi(y)); };
          break;
        }
        case 9:
          chosen = ainv(sym(beta));
          break;
        default:
          chosen = ainv(asym(beta));
          break;
      }
      return tensor(build([&](const V& x, const V& y, const V& z) -> Q { return eta(z) * chosen(x, y) - eta(y) * chosen(x, z); }));
    }

    if (cls == 11) {
      Matrix7<Q> braw = zero_matrix<Q>();
      for (int a = 0; a < 6; ++a)
        for (int c = a + 1; c < 6; ++c) {
          braw[a][c] = rnd();
          braw[c][a] = -braw[a][c];
        }
      auto form = [braw](const V& y, const V& z) -> Q {
        Q s = 0;
        for (int a = 0; a < 6; ++a)
          for (int c = 0; c < 6; ++c) s += y[a] * z[c] * braw[a][c];
        return s;
      };
      return tensor(build([&](const V& x, const V& y, const V& z) -> Q { return eta(x) * (form(y, z) - form(phi(y), phi(z))); }));
    }

    // C12: alpha(x,y,z) = eta(x) (eta(y) w(z) - eta(z) w(y)), w perp xi.
    const V w = vec({1, 2, 0, -1, 0, 0, 0});
    return tensor(build([&](const V& x, const V& y, const V& z) -> Q { return eta(x) * (eta(y) * dot(w, z) - eta(z) * dot(w, y)); }));
  }
};

}  // namespace g2c::test
