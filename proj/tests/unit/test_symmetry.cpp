#include <numeric>

#include "bipoly/acceptance.hpp"
#include "bipoly/catalog.hpp"
#include "bipoly/symmetry.hpp"
#include "doctest.h"

using namespace bipoly;

TEST_CASE("group orders against brute force") {
  for (const Polytope& p : {cube(2), cube(3), cube(4), regular_polygon(3), regular_polygon(5), bipartite_polygon(1, 1.1, 4)}) {
    const auto oracle = brute_force_symmetry_order(p);
    REQUIRE(oracle);
    CHECK(symmetry_group(p).order == *oracle);
  }
  CHECK(brute_force_symmetry_order(cube(3)) == std::size_t{48});
  CHECK(brute_force_symmetry_order(regular_polygon(3)) == std::size_t{12});
}

TEST_CASE("orders of polyhedral groups") {
  CHECK(symmetry_group(rhombic_dodecahedron()).order == 48);
  CHECK(symmetry_group(rhombic_triacontahedron()).order == 120);
  CHECK(symmetry_group(icosahedron_from_cube()).order == 120);
  CHECK(symmetry_group(permutahedron(parse_group("A3"))).order == 48);  // the full octahedral group
  CHECK(symmetry_group(rhombic_hexahedron(1.5)).order == 12);
  CHECK(symmetry_group(bilinski_dodecahedron()).order == 8);
}

TEST_CASE("generators act as permutations of the vertices") {
  const Polytope p = rhombic_triacontahedron();
  const auto g = symmetry_group(p);
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    const auto& perm = g.generator_perms[i];
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(sorted.size());
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
    for (int v = 0; v < p.num_vertices(); ++v) CHECK((g.generators[i] * p.vertex(v) - p.vertex(perm[v])).norm() < 1e-9);
  }
}

TEST_CASE("orbits and transitivity") {
  const Polytope rd = rhombic_dodecahedron();
  const auto g = symmetry_group(rd);
  CHECK(orbits(rd, g, OrbitKind::kVertices).size() == 2);
  CHECK(orbits(rd, g, OrbitKind::kEdges).size() == 1);
  CHECK(orbits(rd, g, OrbitKind::kArcs).size() == 2);
  CHECK(is_arc_transitive(cube(3)));
  CHECK_FALSE(is_edge_transitive(permutahedron(parse_group("B3"))));
  CHECK(is_vertex_transitive(permutahedron(parse_group("B3"))));
}

TEST_CASE("classification labels") {
  CHECK(classify_transitivity(bipartite_polygon(1, 1.2, 3)).classification == "edge-not-vertex: non-regular 2k-gon (2k=6)");
  CHECK(classify_transitivity(rhombic_dodecahedron()).classification == "edge-not-vertex: rhombic dodecahedron");
  CHECK(classify_transitivity(rhombic_triacontahedron()).classification == "edge-not-vertex: rhombic triacontahedron");
  CHECK(classify_transitivity(cube(3)).classification == "vertex- and edge-transitive");
  CHECK(classify_transitivity(permutahedron(parse_group("A3"))).classification == "vertex-not-edge");
  CHECK(classify_transitivity(bilinski_dodecahedron()).classification == "neither");
}

TEST_CASE("off-centre input") {
  const Polytope shifted = cube(3).translated(Point::Constant(3, 0.5), "shift");
  CHECK_THROWS_AS(symmetry_group(shifted), std::invalid_argument);
  const auto r = classify_transitivity(shifted);
  CHECK(r.group_order == 48);
  CHECK(r.provenance.find("shift") != std::string::npos);
}
