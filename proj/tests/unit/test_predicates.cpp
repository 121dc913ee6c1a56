#include <cmath>
#include <numbers>
#include <random>

#include "bipoly/catalog.hpp"
#include "bipoly/hull3d.hpp"
#include "bipoly/predicates.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {

Polytope tetrahedron() {
  std::vector<Point> vs;
  for (const auto& v : {Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1), Eigen::Vector3d(-1, 1, -1),
                        Eigen::Vector3d(-1, -1, 1)}) {
    vs.emplace_back(Point(v));
  }
  const auto faces = faces_3d(Polytope(3, vs, {}));
  return Polytope(3, vs, edges_from_faces(faces), faces);
}

}  // namespace

TEST_CASE("regular tetrahedron dihedral is arccos(1/3)") {
  const Polytope t = tetrahedron();
  REQUIRE(t.num_edges() == 6);
  for (const auto& e : t.edges()) CHECK(dihedral_angle(t, e) == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("derive_edges agrees with hull edges on random point sets") {
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Point> vs;
    for (int i = 0; i < 14; ++i) vs.emplace_back(Point(Eigen::Vector3d(g(rng), g(rng), g(rng)).normalized()));
    const Polytope p(3, vs, {});
    const auto faces = faces_3d(p);
    // every point on the unit sphere is a vertex, and the generic hull is simplicial
    CHECK(faces.size() == 2 * vs.size() - 4);
    CHECK(derive_edges(p) == edges_from_faces(faces));
  }
}

TEST_CASE("origin interior, affine rank and convex position") {
  const Polytope c = cube(3);
  CHECK(contains_origin_interior(c));
  CHECK_FALSE(contains_origin_interior(c.translated(Point::Constant(3, 1.0), "shift")));
  CHECK_FALSE(contains_origin_interior(c.translated(Point::Constant(3, 5.0), "shift")));
  CHECK(affine_rank(c.vertices()) == 3);
  std::vector<Point> flat{Point::Zero(3), Point::Unit(3, 0), Point::Unit(3, 1), Point::Unit(3, 0) + Point::Unit(3, 1)};
  CHECK(affine_rank(flat) == 2);
  CHECK(in_convex_position(c));
  std::vector<Point> with_centre = c.vertices();
  with_centre.push_back(Point::Zero(3));
  CHECK_FALSE(in_convex_position(Polytope(3, with_centre, {})));
}

TEST_CASE("validate_polytope reports a non-edge") {
  const Polytope c = cube(3);
  CHECK(validate_polytope(c).empty());
  auto edges = c.edges();
  edges.push_back({0, 7});  // body diagonal
  CHECK_FALSE(validate_polytope(c.with_edges(edges)).empty());
}

TEST_CASE("zonotope 2-faces are centrally symmetric; the icosahedron's are not") {
  CHECK(centrally_symmetric_2faces(rhombic_dodecahedron()));
  CHECK(centrally_symmetric_2faces(permutahedron(parse_group("B3"))));
  CHECK_FALSE(centrally_symmetric_2faces(icosahedron_from_cube()));
}

TEST_CASE("faces are planar") {
  const Polytope p = permutahedron(parse_group("H3"));
  for (const auto& f : two_faces(p)) CHECK(face_planarity_error(p, f) < 1e-9);
}
