#pragma once

#include "bipoly/golden.hpp"
#include "bipoly/polytope.hpp"

#include "json.hpp"

#include <string>

namespace bipoly {

/// Which single condition fixes the apex height of the construction:
/// equal edge lengths, or a common sphere tangent to all edges.
enum class NearMissVariant { kTangent, kEquilateral };

NearMissVariant parse_variant(const std::string& name);
std::string to_string(NearMissVariant v);

/// (4phi - 3)^2 + (3phi - 1)^2, checked exactly against 25phi^2 - 30phi + 10,
/// 35 - 55phi and 1 + phi^10. Throws std::logic_error if any link fails.
GoldenNumber near_miss_identity();

/// The polyhedron Q: each icosahedron vertex v is replaced by an apex t*v/|v|
/// ringed by five rhombi (kites in the tangent variant) whose outer corners are
/// the edge midpoints. 102 vertices, 180 edges, 60 quadrilaterals and 20
/// hexagons. Vertex order is canonical (lexicographic in rounded coordinates).
Polytope construct_Q(NearMissVariant variant);

/// Apex height t solving the variant's condition.
double apex_height(NearMissVariant variant);

/// A point of the (y, z) plane with golden-field coordinates.
struct ProjectedPoint {
  GoldenNumber y, z;
};

struct ApexProjection {
  ProjectedPoint exact;            // (4phi - 3, 3phi - 1)
  Eigen::Vector2d measured;        // apex over (0, -phi, 1), projected to (y, z)
  ProjectedPoint midpoint_exact;   // B = (A + C) / 2
  Eigen::Vector2d midpoint_measured;
  double deviation = 0;            // max distance between exact and measured points
};

/// Projects the apex above the icosahedron vertex (0, -phi, 1) and the adjacent
/// 1-vertices onto the (y, z) plane. Throws std::invalid_argument if Q has no
/// apex on that axis.
ApexProjection project_apex(const Polytope& q);

struct NearMissReport {
  NearMissVariant variant = NearMissVariant::kEquilateral;
  GoldenNumber oa_sq_exact;   // 1 + phi^10
  double oa_float = 0;        // sqrt of the above
  double oc = 1;
  double ratio = 0;           // |OA| / |OC| from the exact value
  double gap_percent = 0;
  double apex_height = 0;
  double measured_ratio = 0;  // apex norm / midpoint norm in the built Q
  double v1_radius_spread = 0, v2_radius_spread = 0, edge_spread = 0;  // max/min - 1
  bool tangent = false;       // common edge-tangent sphere
  bool bipartite = false;
  std::string reason;         // why Q is not bipartite
};

NearMissReport near_miss_report(NearMissVariant variant);
nlohmann::json to_json(const NearMissReport& r);

/// 1-vertices of type (4,4,6), 2-vertices of type (4,6,4,6) in alternating
/// order or (4,4,4,4,4), the two kinds forming the colour classes, and no edge
/// between two hexagons. Faces are recomputed from the hull.
bool verify_local_types(const Polytope& q);

}  // namespace bipoly
