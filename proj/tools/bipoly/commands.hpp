#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "bipoly/catalog.hpp"
#include "bipoly/io.hpp"
#include "bipoly/near_miss.hpp"
#include "json.hpp"

namespace bipoly::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct CommandResult {
  int exit_code = kOk;
  std::string text;
  std::optional<nlohmann::json> json;
};

struct GenerateOptions {
  std::string name;
  CatalogParams params;
  FileFormat format = FileFormat::kJson;
  std::optional<std::filesystem::path> output;  // stdout when empty
};

CommandResult cmd_generate(const GenerateOptions& opt);
CommandResult cmd_analyze(const std::filesystem::path& path, double tolerance = 1e-9);
CommandResult cmd_symmetry(const std::filesystem::path& path);
CommandResult cmd_tables(bool check_expected);
CommandResult cmd_nearmiss(NearMissVariant variant, const std::optional<std::filesystem::path>& output,
                           std::optional<FileFormat> format);
CommandResult cmd_verify_paper();

// One-line verdict used by `analyze`, e.g. "strictly bipartite; edge-transitive; not vertex-transitive".
std::string analysis_summary(const Polytope& p, double tolerance = 1e-9);

}  // namespace bipoly::cli
