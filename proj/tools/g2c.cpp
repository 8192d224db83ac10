// g2c: analyse almost contact metric structures induced by G2 structures on
// frame manifolds.
//
// Exit codes: 0 success, 1 invalid input or usage, 2 audit or internal
// consistency failure.

#include <CLI11.hpp>

#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "g2c/analysis.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitAudit = 2;

/// Accepts "a b c" as separate arguments or "a,b,c" in one.
template <std::size_t N>
std::array<g2c::Rational, N> parse_rationals(const std::vector<std::string>& args, const char* flag) {
  std::vector<std::string> parts;
  for (const auto& a : args) {
    std::stringstream ss(a);
    std::string piece;
    while (std::getline(ss, piece, ','))
      if (!piece.empty()) parts.push_back(piece);
  }
  if (parts.size() != N)
    throw g2c::ValidationError(std::string(flag) + ": expected " + std::to_string(N) + " rationals, got " +
                               std::to_string(parts.size()));
  std::array<g2c::Rational, N> out;
  for (std::size_t k = 0; k < N; ++k) out[k] = g2c::parse_rational(parts[k]);
  return out;
}

void print(const nlohmann::json& j, const std::string& format, const std::string& text) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G2 structures, induced almost contact metric structures and their Chinea-Gonzalez classes"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "text";
  std::string backend;

  auto* validate = app.add_subcommand("validate", "Check a manifold spec (brackets, Jacobi, cross product axioms)");
  validate->add_option("file", file, "Spec file or builtin:NAME")->required();
  validate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tables = app.add_subcommand("tables", "Connection, cross product, d eta and d phi tables");
  tables->add_option("file", file, "Spec file or builtin:NAME")->required();
  tables->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  tables->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));

  std::vector<std::string> xi_args;
  std::vector<std::string> u_args;
  bool normalize = false;
  auto* analyze = app.add_subcommand("analyze", "Full report for one unit field xi");
  analyze->add_option("file", file, "Spec file or builtin:NAME")->required();
  auto* xi_opt = analyze->add_option("--xi", xi_args, "7 rationals, e.g. --xi 1 0 0 0 0 0 0 or --xi 3/5,4/5,0,0,0,0,0");
  analyze->add_option("--u", u_args, "6 rationals; xi is their inverse stereographic image")->excludes(xi_opt);
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
  analyze->add_flag("--normalize", normalize, "Float backend: rescale xi to unit length");

  g2c::FuzzOptions fopts;
  auto* fuzz = app.add_subcommand("fuzz", "Theorem audit on seeded random rational unit fields");
  fuzz->add_option("file", file, "Spec file or builtin:NAME")->required();
  fuzz->add_option("--trials", fopts.trials)->required()->check(CLI::Range(1, std::numeric_limits<int>::max()));
  fuzz->add_option("--seed", fopts.seed)->required();
  fuzz->add_option("--jobs", fopts.jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string dump;
  auto* examples = app.add_subcommand("examples", "List the built-in specs");
  examples->add_option("--dump", dump, "Print the named built-in spec as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    g2c::ParseOptions popts;
    popts.require_unit_xi = !normalize;

    if (*examples) {
      if (!dump.empty()) {
        std::cout << g2c::spec_to_json(g2c::builtin_example(dump)).dump(2) << "\n";
        return 0;
      }
      for (const auto& s : g2c::builtin_examples())
        std::cout << "builtin:" << s.name << "  (" << s.brackets.size() << " brackets)\n";
      return 0;
    }

    if (*validate) {
      const g2c::ManifoldSpec spec = g2c::parse_spec(file, popts);
      const nlohmann::json r = g2c::validation_report(spec);
      std::ostringstream text;
      text << "Spec " << spec.name << ": valid\n";
      for (const char* section : {"structure", "connection", "cross_axioms"}) {
        text << section << ":\n";
        for (const auto& c : r[section]) {
          text << "  " << (c["passed"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>();
          if (!c["witness"].get<std::string>().empty()) text << "  [" << c["witness"].get<std::string>() << "]";
          text << "\n";
        }
      }
      if (spec.allow_non_jacobi) text << "note: allow_non_jacobi is set; Jacobi failures do not reject this spec\n";
      print(r, format, text.str());
      return 0;
    }

    const g2c::ManifoldSpec spec = g2c::parse_spec(file, popts);

    if (*tables) {
      const nlohmann::json r = g2c::manifold_tables(spec, backend);
      print(r, format, g2c::render_tables_text(r));
      return 0;
    }

    if (*analyze) {
      g2c::AnalyzeOptions opts;
      if (!xi_args.empty()) opts.xi = parse_rationals<7>(xi_args, "--xi");
      if (!u_args.empty()) opts.u = parse_rationals<6>(u_args, "--u");
      opts.backend = backend;
      opts.normalize = normalize;
      const nlohmann::json r = g2c::analyze(spec, opts);
      print(r, format, g2c::render_text(r));
      return r["audit"]["passed"].get<bool>() ? 0 : kExitAudit;
    }

    if (*fuzz) {
      const nlohmann::json s = g2c::fuzz(spec, fopts);
      print(s, format, g2c::render_fuzz_text(s));
      return s["failure"].is_null() ? 0 : kExitAudit;
    }
  } catch (const g2c::InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitAudit;
  } catch (const g2c::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
