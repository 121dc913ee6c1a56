#include <cmath>
#include <numbers>

#include "bipoly/catalog.hpp"
#include "bipoly/hull3d.hpp"
#include "bipoly/predicates.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {
// V, E, F of the hull, independent of the constructor's own faces
std::array<std::size_t, 3> hull_counts(const Polytope& p) {
  const auto faces = faces_3d(p);
  return {p.vertices().size(), edges_from_faces(faces).size(), faces.size()};
}
}  // namespace

TEST_CASE("hull counts of the 3D catalog") {
  using A = std::array<std::size_t, 3>;
  CHECK(hull_counts(cube(3)) == A{8, 12, 6});
  CHECK(hull_counts(rhombic_dodecahedron()) == A{14, 24, 12});
  CHECK(hull_counts(rhombic_triacontahedron()) == A{32, 60, 30});
  CHECK(hull_counts(bilinski_dodecahedron()) == A{14, 24, 12});
  CHECK(hull_counts(rhombic_icosahedron()) == A{22, 40, 20});
  CHECK(hull_counts(icosahedron_from_cube()) == A{12, 30, 20});
  CHECK(hull_counts(rhombic_hexahedron(1.7)) == A{8, 12, 6});
  CHECK(hull_counts(permutahedron(parse_group("A3"))) == A{24, 36, 14});
  CHECK(hull_counts(permutahedron(parse_group("B3"))) == A{48, 72, 26});
  CHECK(hull_counts(permutahedron(parse_group("H3"))) == A{120, 180, 62});
}

TEST_CASE("constructor faces match the hull and edges match the LP oracle") {
  for (const Polytope& p : {rhombic_triacontahedron(), permutahedron(parse_group("B3")), rhombic_icosahedron(),
                            permutahedron(parse_group("I1+I2(5)"))}) {
    CHECK(p.faces().size() == faces_3d(p).size());
    CHECK(derive_edges(p) == p.edges());
  }
  CHECK(derive_edges(hyperprism(3, 2)) == hyperprism(3, 2).edges());
}

TEST_CASE("all catalog solids have unit-ish equal edges") {
  for (const Polytope& p : {rhombic_dodecahedron(), rhombic_triacontahedron(), bilinski_dodecahedron(),
                            rhombic_icosahedron(), permutahedron(parse_group("H3")), cube(4)}) {
    double lo = 1e9, hi = 0;
    for (const auto& e : p.edges()) {
      const double l = (p.vertex(e[0]) - p.vertex(e[1])).norm();
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    CHECK(hi - lo < 1e-9 * hi);
  }
}

TEST_CASE("bipartite polygon preconditions") {
  CHECK(bipartite_polygon(1, 2, 2).num_vertices() == 4);
  CHECK_THROWS_AS(bipartite_polygon(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(bipartite_polygon(1, 2, 3), std::invalid_argument);  // r1 <= r2 cos(pi/3)
  CHECK_THROWS_AS(bipartite_polygon(1, 1, 1), std::invalid_argument);
  const Polytope p = bipartite_polygon(1, 1.2, 4);
  for (int i = 0; i < 8; ++i) CHECK(p.vertex(i).norm() == doctest::Approx(i % 2 ? 1.2 : 1.0));
}

TEST_CASE("permutahedron rejects a non-generic seed") {
  Point seed(3);
  seed << 1, 1, 1;
  const auto g = parse_group("A3");
  // a seed on a mirror has a non-trivial stabiliser
  Point on_mirror = seed - g.roots[0] * g.roots[0].dot(seed);
  CHECK_THROWS_AS(permutahedron(g, on_mirror), std::domain_error);
}

TEST_CASE("registry") {
  CHECK(build_catalog("hyperprism", {{"k", "3"}, {"folds", "2"}}).num_vertices() == 36);
  CHECK(build_catalog("permutahedron", {{"group", "B3"}}).num_vertices() == 48);
  CHECK(build_catalog("near-miss", {{"variant", "tangent"}}).num_vertices() == 102);
  CHECK_THROWS_AS(build_catalog("dodecahedron"), std::invalid_argument);
  CHECK_THROWS_AS(build_catalog("cube", {{"k", "3"}}), std::invalid_argument);
  CHECK_THROWS_AS(build_catalog("cube", {{"d", "three"}}), std::invalid_argument);
  for (const auto& e : catalog_entries()) {
    if (e.name == "bipartite-polygon") continue;  // needs r1, r2, k
    CHECK_NOTHROW(build_catalog(e.name));
  }
}
