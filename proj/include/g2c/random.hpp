#pragma once

#include <cstdint>
#include <random>

#include "g2c/exterior.hpp"

namespace g2c {

/// SplitMix64 finaliser; used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ trial);
}

/// Small rationals p/q with |p| <= bound and 1 <= q <= bound.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, int bound = 16) : gen_(seed), bound_(bound) {}

  Rational next() {
    const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
    const long p = static_cast<long>(gen_() % span) - bound_;
    const long q = static_cast<long>(gen_() % static_cast<std::uint64_t>(bound_)) + 1;
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  Vector7<Rational> vector() {
    Vector7<Rational> v;
    for (auto& x : v) x = next();
    return v;
  }

  std::array<Rational, 6> stereo() {
    std::array<Rational, 6> u;
    for (auto& x : u) x = next();
    return u;
  }

 private:
  std::mt19937_64 gen_;
  int bound_;
};

template <Scalar S>
Vector7<S> convert(const Vector7<Rational>& v) {
  Vector7<S> r;
  for (int i = 0; i < kDim; ++i) r[i] = from_rational<S>(v[i]);
  return r;
}

}  // namespace g2c
