#pragma once

#include "bipoly/polytope.hpp"
#include "bipoly/reflection_group.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bipoly {

using Permutation = std::vector<int>;

/// Orthogonal symmetries of a polytope, stored as matrices together with the
/// vertex permutations they induce.
struct IsometryGroup {
  std::vector<Eigen::MatrixXd> generators;
  std::vector<Permutation> generator_perms;
  std::size_t order = 0;
};

/// Full orthogonal symmetry group, found as the permutations of the vertices
/// that preserve all pairwise inner products (backtracking over a vertex
/// basis, pruned by inner-product colours). Requires the vertex centroid at
/// the origin (std::invalid_argument otherwise); throws GroupTooLargeError
/// past `cap` elements.
IsometryGroup symmetry_group(const Polytope& p, std::size_t cap = kGroupCap, double color_tol = 1e-7);

enum class OrbitKind { kVertices, kEdges, kArcs };

/// Orbits of vertices, edges (indices into p.edges()) or arcs (2e for the arc
/// leaving edges()[e][0], 2e+1 for the one leaving edges()[e][1]). Each orbit
/// is sorted and orbits are ordered by their smallest element.
std::vector<std::vector<int>> orbits(const Polytope& p, const IsometryGroup& g, OrbitKind kind);

bool is_vertex_transitive(const Polytope& p);
bool is_edge_transitive(const Polytope& p);
bool is_arc_transitive(const Polytope& p);

struct TransitivityReport {
  std::size_t group_order = 0;
  std::size_t vertex_orbits = 0, edge_orbits = 0, arc_orbits = 0;
  bool vertex_transitive = false, edge_transitive = false, arc_transitive = false;
  std::string classification;  // e.g. "edge-not-vertex: rhombic triacontahedron"
  std::string provenance;      // input provenance plus any recentring note
};

/// Transitivity flags; for edge- but not vertex-transitive input, the match
/// against the known list (non-regular 2k-gon, rhombic dodecahedron, rhombic
/// triacontahedron). Off-centre input is translated to its vertex centroid.
TransitivityReport classify_transitivity(const Polytope& p);

nlohmann::json to_json(const TransitivityReport& r);

}  // namespace bipoly
