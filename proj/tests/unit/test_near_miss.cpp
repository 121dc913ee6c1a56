#include <cmath>

#include "bipoly/bipartite.hpp"
#include "bipoly/catalog.hpp"
#include "bipoly/golden.hpp"
#include "bipoly/hull3d.hpp"
#include "bipoly/near_miss.hpp"
#include "bipoly/predicates.hpp"
#include "doctest.h"

using namespace bipoly;

TEST_CASE("exact identity") { CHECK(near_miss_identity() == GoldenNumber::one() + golden_pow(GoldenNumber::phi(), 10)); }

TEST_CASE("equilateral Q") {
  const Polytope q = construct_Q(NearMissVariant::kEquilateral);
  CHECK(q.num_vertices() == 102);
  CHECK(q.num_edges() == 180);
  CHECK(q.num_faces() == 80);
  CHECK(faces_3d(q).size() == 80);
  CHECK(derive_edges(q) == q.edges());
  for (const auto& f : q.faces()) CHECK(face_planarity_error(q, f) < 1e-9);
  CHECK(apex_height(NearMissVariant::kEquilateral) ==
        doctest::Approx(std::sqrt(1 + std::pow(kPhi, 10))).epsilon(1e-12));
  CHECK(verify_local_types(q));
  const auto r = near_miss_report(NearMissVariant::kEquilateral);
  CHECK(r.edge_spread < 1e-10);
  CHECK(r.measured_ratio == doctest::Approx(1.00405707).epsilon(1e-8));
  CHECK(r.gap_percent == doctest::Approx(0.4057).epsilon(1e-3));
  CHECK_FALSE(r.bipartite);
  CHECK_FALSE(analyze_bipartite(q));
}

TEST_CASE("tangent Q") {
  const Polytope q = construct_Q(NearMissVariant::kTangent);
  CHECK(apex_height(NearMissVariant::kTangent) == doctest::Approx(1.000908).epsilon(1e-6));
  const auto r = near_miss_report(NearMissVariant::kTangent);
  CHECK(r.tangent);
  CHECK(1 + r.edge_spread == doctest::Approx(1.01223).epsilon(1e-5));
  CHECK(verify_local_types(q));
}

TEST_CASE("projected apex agrees with the golden coordinates") {
  const auto a = project_apex(construct_Q(NearMissVariant::kEquilateral));
  CHECK(a.exact.y == GoldenNumber(-3, 4));
  CHECK(a.exact.z == GoldenNumber(-1, 3));
  CHECK(a.deviation < 1e-9);
  const double d2 = a.measured.squaredNorm();
  CHECK(d2 == doctest::Approx((GoldenNumber::one() + golden_pow(GoldenNumber::phi(), 10)).to_double()).epsilon(1e-9));
}

TEST_CASE("local type check rejects other solids and perturbed Q") {
  CHECK_FALSE(verify_local_types(rhombic_dodecahedron()));
  const Polytope q = construct_Q(NearMissVariant::kEquilateral);
  auto vs = q.vertices();
  int apex = 0;
  for (int i = 0; i < q.num_vertices(); ++i)
    if (vs[i].norm() > vs[apex].norm()) apex = i;
  vs[apex] *= 1.05;
  CHECK_FALSE(verify_local_types(Polytope(3, vs, q.edges(), q.faces())));
  CHECK_THROWS_AS(parse_variant("round"), std::invalid_argument);
  CHECK(to_string(parse_variant("tangent")) == "tangent");
}
