#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2c/instance.hpp"

namespace g2c {

/// Exact membership in a space whose defining relation is fully given.
struct Membership {
  bool member = true;
  std::string witness;
};

struct SpaceMembership {
  Membership trivial;
  Membership d1;
  Membership d2;
  Membership c12;
};

/// Defining relations checked on every adapted-basis triple, scanning each
/// slot in the order (xi, f1, .., f6).
template <Scalar S>
SpaceMembership space_membership(const CovDerivTensor<S>& t, double scale = 1.0);

/// Necessary-condition verdict: "excluded" is definitive, "consistent" is not a
/// membership claim.
struct ClassVerdict {
  std::string name;
  bool excluded = false;
  std::string witness;
};

struct Elimination {
  bool trivial = false;
  /// C1 .. C12.
  std::array<ClassVerdict, 12> classes;
  ClassVerdict d1;
  ClassVerdict d2;

  const ClassVerdict& c(int n) const { return classes[static_cast<std::size_t>(n - 1)]; }
};

/// Ratio used in the C4 relation i1 = i3 = r * i4.
inline constexpr int kC4Ratio = 1;

template <Scalar S>
Elimination class_elimination(const InvariantVector<S>& inv);

enum class Tristate { yes, no, indeterminate };
std::string to_string(Tristate t);

struct NamedCheck {
  Tristate value = Tristate::no;
  std::string witness;
  /// Both sides at the witness, when the check compares two values.
  std::string lhs;
  std::string rhs;

  bool holds() const { return value == Tristate::yes; }
};

struct NamedResults {
  NamedCheck cosymplectic;
  NamedCheck almost_k_contact;
  /// nabla_xi Phi = 0, computed from alpha; must agree with almost_k_contact.
  NamedCheck nabla_xi_Phi_zero;
  NamedCheck semi_cosymplectic;
  NamedCheck sasakian;
  NamedCheck trans_sasakian_necessary;
  /// Killing and not parallel, so the structure is not nearly-K-cosymplectic.
  NamedCheck nearly_k_cosymplectic_obstruction;
};

template <Scalar S>
NamedResults named_checks(const Manifold<S>& m, const Instance<S>& in);

struct AuditItem {
  std::string name;
  bool hypothesis = true;
  bool passed = true;
  std::string detail;
};

struct ClassReport {
  SpaceMembership space;
  Elimination elimination;
  NamedResults named;
  std::vector<AuditItem> audit;

  bool audit_ok() const;
  const AuditItem* first_audit_failure() const;
};

/// Evaluates each theorem's hypothesis on the instance and, where it holds,
/// checks the computed verdicts against the conclusion.
template <Scalar S>
std::vector<AuditItem> theorem_audit(const Manifold<S>& m, const Instance<S>& in, const SpaceMembership& space,
                                     const Elimination& elim, const NamedResults& named);

template <Scalar S>
ClassReport classify(const Manifold<S>& m, const Instance<S>& in);

/// Throws InternalConsistencyError naming the first failed audit item.
void require_consistent(const ClassReport& report);

}  // namespace g2c
