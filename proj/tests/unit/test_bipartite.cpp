#include <cmath>
#include <numbers>

#include "bipoly/bipartite.hpp"
#include "bipoly/catalog.hpp"
#include "bipoly/predicates.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {
constexpr double kPi = std::numbers::pi;

// spherical angle at v between the arcs towards u and w, measured directly
double spherical_angle(const Point& v, const Point& u, const Point& w) {
  const Point n = v.normalized();
  const Point tu = u - n * n.dot(u), tw = w - n * n.dot(w);
  return std::acos(std::clamp(tu.normalized().dot(tw.normalized()), -1.0, 1.0));
}
}  // namespace

TEST_CASE("rhombic solids are strictly bipartite with the expected radii") {
  const auto d = analyze_bipartite(rhombic_dodecahedron());
  REQUIRE(d);
  CHECK(d.report->strict);
  CHECK(d.report->params.r2 / d.report->params.r1 == doctest::Approx(2 / std::sqrt(3.0)));
  CHECK(d.report->classes[0].size() == 8);
  CHECK(d.report->classes[1].size() == 6);

  const auto t = analyze_bipartite(rhombic_triacontahedron());
  REQUIRE(t);
  CHECK(t.report->classes[0].size() == 20);
  CHECK(t.report->classes[1].size() == 12);
}

TEST_CASE("non-bipartite reasons") {
  const auto b = analyze_bipartite(bilinski_dodecahedron());
  REQUIRE_FALSE(b);
  CHECK(*b.reason == NonBipartiteReason::kRadiusSpread);
  CHECK(to_string(*b.reason) == "RADIUS_SPREAD");
  const auto ico = analyze_bipartite(icosahedron_from_cube());
  REQUIRE_FALSE(ico);
  CHECK(*ico.reason == NonBipartiteReason::kOddCycle);
  const auto prism = analyze_bipartite(cartesian_product(regular_polygon(3), cube(1, 2.0)));
  REQUIRE_FALSE(prism);
  CHECK(*prism.reason == NonBipartiteReason::kUnequalEdges);
}

TEST_CASE("edge in-sphere") {
  const Polytope c = cube(3);
  CHECK(verify_edge_tangency(c, std::sqrt(2.0)));
  CHECK_FALSE(verify_edge_tangency(c, 1.3));
  const auto p = insphere_from_three(std::sqrt(3.0), 2.0, std::sqrt(3.0));
  const auto v = analyze_bipartite(rhombic_dodecahedron());
  CHECK(v.report->params.rho / v.report->params.r1 == doctest::Approx(p.rho / p.r1));
  CHECK(verify_edge_tangency(rhombic_dodecahedron(), *v.report));
  const auto [lo, hi] = edge_distance_range(rhombic_triacontahedron());
  CHECK(hi - lo < 1e-12);
  CHECK_THROWS_AS(insphere_from_three(1.0, 1.0, 3.0), std::domain_error);
}

TEST_CASE("spherical angles match direct measurement") {
  for (const Polytope& p : {rhombic_dodecahedron(), rhombic_triacontahedron(), permutahedron(parse_group("B3"))}) {
    const auto v = analyze_bipartite(p);
    REQUIRE(v);
    const AngleTable table = angle_table(p, *v.report);
    for (const auto& f : p.faces()) {
      const auto& row = table.by_size.at(static_cast<int>(f.size()));
      for (std::size_t i = 0; i < f.size(); ++i) {
        const int a = f[(i + f.size() - 1) % f.size()], b = f[i], c = f[(i + 1) % f.size()];
        const double beta = spherical_angle(p.vertex(b), p.vertex(a), p.vertex(c));
        CHECK(beta == doctest::Approx(v.report->class_of[b] == 0 ? row.beta1 : row.beta2).epsilon(1e-9));
      }
    }
    CHECK(check_spherical_sums(p, *v.report, table));
  }
}

TEST_CASE("spherical_from_planar on a square of the cube") {
  // cube with half-edge 1: r = sqrt 3, ell = 2, spherical edge length acos(1/3)
  const double ls = std::acos(1.0 / 3.0);
  CHECK(spherical_from_planar(kPi / 2, 2.0, std::sqrt(3.0), ls) == doctest::Approx(2 * kPi / 3));
}

TEST_CASE("vertex types") {
  const auto t = vertex_types(rhombic_triacontahedron());
  CHECK(t.census() == std::map<std::string, int>{{"(4,4,4)", 20}, {"(4,4,4,4,4)", 12}});
  const auto a = vertex_types(permutahedron(parse_group("A3")));
  CHECK(a.vertex[0].str() == "(4,6,6)");
  const auto h = vertex_types(permutahedron(parse_group("H3")));
  CHECK(h.vertex[0].str() == "(4,6,10)");
  for (const auto& [e, sizes] : h.edge) CHECK(sizes.size() == 2);
}
