#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "g2c/spec.hpp"

namespace g2c {

struct AnalyzeOptions {
  /// Overrides the spec's xi (7 rationals) or u (6 stereographic parameters).
  std::optional<std::array<Rational, 7>> xi;
  std::optional<std::array<Rational, 6>> u;
  /// "exact" or "float"; empty keeps the spec's backend.
  std::string backend;
  /// Float backend only: rescale xi to unit length before analysis.
  bool normalize = false;
};

/// Full pipeline on one unit field. The JSON report is deterministic and
/// carries every table and verdict; `render_text` only reformats it.
nlohmann::json analyze(const ManifoldSpec& spec, const AnalyzeOptions& opts = {});

/// The xi-independent tables: connection, cross products, d eta, d phi vs star phi.
nlohmann::json manifold_tables(const ManifoldSpec& spec, const std::string& backend = {});

/// Structure and cross-product check reports.
nlohmann::json validation_report(const ManifoldSpec& spec);

std::string render_text(const nlohmann::json& report);
std::string render_tables_text(const nlohmann::json& tables);

struct FuzzOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  /// Worker threads; 0 uses the hardware concurrency.
  int jobs = 1;
  /// Keep the per-trial xi in the summary.
  bool record_xi = false;
};

/// Seeded random rational unit fields. The summary does not depend on `jobs`.
/// On the first audit failure (lowest trial index) the run stops and the
/// summary's "failure" entry carries seed, trial index, u and xi.
nlohmann::json fuzz(const ManifoldSpec& spec, const FuzzOptions& opts);
std::string render_fuzz_text(const nlohmann::json& summary);

}  // namespace g2c
