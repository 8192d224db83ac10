#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "g2c/frame.hpp"
#include "g2c/g2.hpp"

namespace g2c {

/// Frame manifold input. Indices are 1-based as in the file format.
struct ManifoldSpec {
  struct Bracket {
    int i;
    int j;
    int k;
    Rational value;
  };
  struct PhiTerm {
    int i;
    int j;
    int k;
    Rational coeff;
  };

  std::string name;
  std::string backend = "exact";
  std::vector<Bracket> brackets;
  std::vector<PhiTerm> phi;
  std::optional<std::array<Rational, 7>> xi;
  std::optional<std::array<Rational, 6>> u;
  /// Lets bracket tables that fail the Jacobi identity through the gate.
  bool allow_non_jacobi = false;

  template <Scalar S>
  StructureConstants<S> structure_constants() const;
  template <Scalar S>
  G2Structure<S> g2() const;
};

inline constexpr int kSpecVersion = 1;

struct ParseOptions {
  /// Require the file's xi (if any) to be exactly unit.
  bool require_unit_xi = true;
};

/// Schema check only; errors name the offending field.
ManifoldSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ManifoldSpec& spec);

/// Structure, cross-product and unit-xi gates. Throws ValidationError with the witness.
void validate_spec(const ManifoldSpec& spec, const ParseOptions& opts = {});

/// Parses JSON text and runs the gates.
ManifoldSpec parse_spec_text(std::string_view text, const ParseOptions& opts = {});
/// Reads a file, or a built-in when `path` is "builtin:NAME".
ManifoldSpec parse_spec(const std::string& path, const ParseOptions& opts = {});

/// sasakian3, flat, hyperbolic7.
std::vector<ManifoldSpec> builtin_examples();
ManifoldSpec builtin_example(const std::string& name);

}  // namespace g2c
