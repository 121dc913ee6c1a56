#include <filesystem>
#include <sstream>

#include "bipoly/catalog.hpp"
#include "bipoly/io.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {
void check_same(const Polytope& a, const Polytope& b) {
  REQUIRE(a.dim() == b.dim());
  REQUIRE(a.num_vertices() == b.num_vertices());
  CHECK(a.edges() == b.edges());
  for (int i = 0; i < a.num_vertices(); ++i) CHECK((a.vertex(i) - b.vertex(i)).norm() < 1e-15);
}
}  // namespace

TEST_CASE("OFF round-trip in 2D and 3D") {
  for (const Polytope& p : {rhombic_dodecahedron(), bipartite_polygon(1, 1.3, 3), permutahedron(parse_group("A3"))}) {
    std::stringstream ss;
    write_off(ss, p);
    const Polytope q = read_off(ss);
    check_same(p, q);
    CHECK(q.provenance() == p.provenance());
  }
}

TEST_CASE("JSON round-trip keeps full precision, including 4D") {
  for (const Polytope& p : {hyperprism(3, 2), rhombic_triacontahedron()}) {
    check_same(p, polytope_from_json(nlohmann::json::parse(polytope_to_json(p).dump())));
  }
}

TEST_CASE("file round-trip picks the format from the extension") {
  const auto dir = std::filesystem::temp_directory_path();
  const Polytope p = cube(3);
  for (const char* name : {"bipoly_io_test.off", "bipoly_io_test.json"}) {
    const auto path = dir / name;
    save_polytope(path, p, format_for_path(path));
    check_same(p, load_polytope(path));
    std::filesystem::remove(path);
  }
  CHECK(format_for_path("X.OFF") == FileFormat::kOff);
  CHECK(format_for_path("x.txt") == FileFormat::kJson);
  CHECK_THROWS(parse_format("ply"));
}

TEST_CASE("malformed OFF raises ParseError") {
  for (const char* text : {"", "OFF\n", "OFF\n4 1 0\n0 0 0\n", "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 x\n3 0 1 2\n",
                           "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 7\n"}) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_off(is), ParseError);
  }
}
