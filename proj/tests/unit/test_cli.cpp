#include <filesystem>

#include "bipoly/catalog.hpp"
#include "commands.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {
std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::filesystem::path generated(const std::string& name, FileFormat fmt, CatalogParams params = {}) {
  const auto path = tmp("bipoly_cli_" + name + (fmt == FileFormat::kOff ? ".off" : ".json"));
  cli::GenerateOptions opt{name, std::move(params), fmt, path};
  REQUIRE(cli::cmd_generate(opt).exit_code == 0);
  return path;
}
}  // namespace

TEST_CASE("analyze verdict lines") {
  auto line = [](const std::filesystem::path& p) {
    const auto r = cli::cmd_analyze(p);
    return r.text.substr(r.text.find('\n') + 1, r.text.find('\n', r.text.find('\n') + 1) - r.text.find('\n') - 1);
  };
  CHECK(line(generated("rhombic-triacontahedron", FileFormat::kOff)) ==
        "strictly bipartite; edge-transitive; not vertex-transitive");
  CHECK(line(generated("cube", FileFormat::kJson)) == "bipartite (r1=r2); vertex- and edge-transitive");
  CHECK(line(generated("bilinski-dodecahedron", FileFormat::kOff)).rfind("not bipartite: class conflict", 0) == 0);
}

TEST_CASE("OFF and JSON round-trips give identical reports") {
  const auto off = generated("rhombic-dodecahedron", FileFormat::kOff);
  const auto json = generated("rhombic-dodecahedron", FileFormat::kJson);
  auto strip = [](nlohmann::json j) {
    j.erase("file");
    return j;
  };
  CHECK(strip(*cli::cmd_analyze(off).json) == strip(*cli::cmd_analyze(json).json));
}

TEST_CASE("generate counts and stdout output") {
  const auto r = cli::cmd_generate({"hyperprism", {{"k", "3"}, {"folds", "2"}}, FileFormat::kJson, std::nullopt});
  CHECK(nlohmann::json::parse(r.text)["vertices"].size() == 36);
  const auto off = cli::cmd_generate({"rhombic-dodecahedron", {}, FileFormat::kOff, std::nullopt});
  CHECK(off.text.find("14 12 24") != std::string::npos);
  CHECK_THROWS_AS(cli::cmd_generate({"nothing", {}, FileFormat::kOff, std::nullopt}), std::invalid_argument);
}

TEST_CASE("tables, nearmiss, verify-paper") {
  const auto t = cli::cmd_tables(true);
  CHECK(t.exit_code == 0);
  CHECK(t.text == cli::cmd_tables(true).text);
  const auto n = cli::cmd_nearmiss(NearMissVariant::kEquilateral, std::nullopt, std::nullopt);
  CHECK(n.text.find("35 - 55phi") != std::string::npos);
  CHECK(n.text.find("1.00405707") != std::string::npos);
  CHECK(n.text.find("gap = 0.4057%") != std::string::npos);
  const auto v = cli::cmd_verify_paper();
  CHECK(v.exit_code == 0);
  CHECK((*v.json)["passed"] == 13);
}

TEST_CASE("non-convex input is rejected") {
  const Polytope c = cube(3);
  auto vs = c.vertices();
  vs.push_back(Point::Zero(3));
  const auto path = tmp("bipoly_cli_bad.json");
  save_polytope(path, Polytope(3, vs, c.edges()), FileFormat::kJson);
  CHECK_THROWS(cli::cmd_analyze(path));
}
