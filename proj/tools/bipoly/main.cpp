#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace bipoly;

namespace {

int emit(const cli::CommandResult& r, bool as_json) {
  if (as_json && r.json) {
    std::cout << r.json->dump(2) << "\n";
  } else {
    std::cout << r.text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite polytopes: construction, analysis and verification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool as_json = false;
  double tolerance = 1e-9;
  app.add_flag("--json", as_json, "Print the machine-readable report instead of text");
  app.add_option("--tolerance", tolerance, "Absolute/relative tolerance for geometric tests")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> names;
  for (const auto& e : catalog_entries()) names.push_back(e.name);

  // generate
  auto* gen = app.add_subcommand("generate", "Build a catalog polytope and write it as OFF or JSON");
  cli::GenerateOptions gen_opt;
  std::string gen_format = "json";
  std::string gen_out;
  gen->add_option("name", gen_opt.name, "Catalog name")->required()->check(CLI::IsMember(names));
  gen->add_option("--format", gen_format, "off or json")->check(CLI::IsMember({"off", "json"}));
  gen->add_option("-o,--output", gen_out, "Output file (default: stdout)");
  std::map<std::string, std::string> raw;
  for (const char* key : {"r1", "r2", "k", "d", "half-edge", "folds", "group", "seed", "stretch", "variant"}) {
    gen->add_option(std::string("--") + key, raw[key], std::string("Catalog parameter ") + key);
  }

  // analyze / symmetry
  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Bipartite analysis, angle table, vertex types and transitivity");
  analyze->add_option("file", path, "OFF or JSON polytope file")->required()->check(CLI::ExistingFile);
  auto* sym = app.add_subcommand("symmetry", "Symmetry group order and orbit counts");
  sym->add_option("file", path, "OFF or JSON polytope file")->required()->check(CLI::ExistingFile);

  // tables
  auto* tables = app.add_subcommand("tables", "Reproduce the infeasibility tables");
  bool expected = false;
  tables->add_flag("--expected", expected, "Compare against the embedded expected rows; exit 1 on mismatch");

  // nearmiss
  auto* nm = app.add_subcommand("nearmiss", "Near-miss polyhedron Q: exact identity, ratio and gap");
  std::string variant = "equilateral";
  std::string nm_out, nm_format;
  nm->add_option("--variant", variant, "equilateral or tangent")->check(CLI::IsMember({"equilateral", "tangent"}));
  nm->add_option("-o,--output", nm_out, "Also write Q to this file");
  nm->add_option("--format", nm_format, "off or json (default: from the file extension)")
      ->check(CLI::IsMember({"off", "json"}));

  auto* verify = app.add_subcommand("verify-paper", "Run the full acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsageError;
  }

  try {
    if (gen->parsed()) {
      for (const auto& [k, v] : raw) {
        if (gen->count("--" + k) > 0) gen_opt.params[k] = v;
      }
      gen_opt.format = parse_format(gen_format);
      if (!gen_out.empty()) gen_opt.output = gen_out;
      return emit(cli::cmd_generate(gen_opt), as_json && !gen_out.empty());
    }
    if (analyze->parsed()) return emit(cli::cmd_analyze(path, tolerance), as_json);
    if (sym->parsed()) return emit(cli::cmd_symmetry(path), as_json);
    if (tables->parsed()) return emit(cli::cmd_tables(expected), as_json);
    if (nm->parsed()) {
      std::optional<std::filesystem::path> out;
      if (!nm_out.empty()) out = nm_out;
      std::optional<FileFormat> fmt;
      if (!nm_format.empty()) fmt = parse_format(nm_format);
      return emit(cli::cmd_nearmiss(parse_variant(variant), out, fmt), as_json);
    }
    if (verify->parsed()) {
      const auto r = cli::cmd_verify_paper();
      const int code = emit(r, as_json);
      if (r.exit_code != 0 && as_json) std::cerr << "verification failed\n";
      return code;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kVerificationFailed;
  }
  return cli::kUsageError;
}
