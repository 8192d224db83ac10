#pragma once

#include <string>
#include <vector>

#include "g2c/check_report.hpp"
#include "g2c/exterior.hpp"

namespace g2c {

template <Scalar S>
using CrossTable = std::array<std::array<Vector7<S>, kDim>, kDim>;

/// A 3-form together with the bilinear product it induces through
/// g(x × y, z) = phi(x, y, z). Any 3-form is accepted; use
/// validate_cross_axioms to decide whether it really is a G2 form.
template <Scalar S>
class G2Structure {
 public:
  explicit G2Structure(KForm<S> phi);

  const KForm<S>& phi() const { return phi_; }
  /// table()[i][j] = e_i × e_j
  const CrossTable<S>& table() const { return table_; }

 private:
  KForm<S> phi_;
  CrossTable<S> table_;
};

/// phi_0 = e^123 + e^145 + e^167 + e^246 - e^257 - e^347 - e^356
template <Scalar S>
G2Structure<S> standard_phi();

template <Scalar S>
Vector7<S> cross(const G2Structure<S>& g2, const Vector7<S>& x, const Vector7<S>& y);

/// Antisymmetry, orthogonality, norm identity and double-cross identity on
/// all frame pairs and on `random_trials` seeded random rational pairs.
template <Scalar S>
CheckReport validate_cross_axioms(const G2Structure<S>& g2, int random_trials = 100, std::uint64_t seed = 7);

template <Scalar S>
struct CrossEntry {
  int i;  // 0-based, i < j
  int j;
  Vector7<S> value;
};

/// The 21 products e_i × e_j, i < j.
template <Scalar S>
std::vector<CrossEntry<S>> cross_table(const G2Structure<S>& g2);

/// One "e1 x e2 = e3" line per pair.
template <Scalar S>
std::string format_cross_table(const G2Structure<S>& g2);

}  // namespace g2c
