#pragma once

#include "bipoly/polytope.hpp"
#include "bipoly/tolerance.hpp"

#include "json.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bipoly {

/// r1 <= r2 are the vertex radii of the two classes, ell the edge length, rho
/// the radius of the sphere touching every edge, and ell1 + ell2 = ell the
/// distances from the touching point to the V1 and V2 end of an edge.
struct BipartiteParameters {
  double r1 = 0, r2 = 0, ell = 0, rho = 0, ell1 = 0, ell2 = 0;
};

enum class NonBipartiteReason { kUnequalEdges, kOddCycle, kRadiusSpread };

/// "UNEQUAL_EDGES", "ODD_CYCLE", "RADIUS_SPREAD"
std::string to_string(NonBipartiteReason reason);

struct BipartiteReport {
  std::array<std::vector<int>, 2> classes;  // V1, V2
  std::vector<int> class_of;                // 0 for V1, 1 for V2, per vertex
  BipartiteParameters params;
  bool strict = false;                      // r1 < r2 beyond tolerance
};

struct BipartiteVerdict {
  std::optional<BipartiteReport> report;
  std::optional<NonBipartiteReason> reason;  // set iff report is empty
  std::string detail;
  explicit operator bool() const { return report.has_value(); }
};

/// Decides whether all edges have one length, the edge graph is bipartite and
/// vertex norms are constant on each colour class. The class with the smaller
/// radius is V1; when the radii agree, V1 is the class of vertex 0.
BipartiteVerdict analyze_bipartite(const Polytope& p, const Tolerance& tol = {});

/// Solves rho^2 + ell1^2 = r1^2, rho^2 + ell2^2 = r2^2, ell1 + ell2 = ell.
/// Throws std::domain_error when the foot of the perpendicular from the
/// origin does not fall strictly inside the edge.
BipartiteParameters insphere_from_three(double r1, double r2, double ell);

/// True iff every edge touches the sphere of radius rho about the origin at a
/// point strictly inside the edge.
bool verify_edge_tangency(const Polytope& p, double rho, const Tolerance& tol = {});
bool verify_edge_tangency(const Polytope& p, const BipartiteReport& report, const Tolerance& tol = {});

/// Distances from the origin to the edge lines, (min, max).
std::pair<double, double> edge_distance_range(const Polytope& p);

/// Angles (radians) for one face size 2k.
struct FaceTypeAngles {
  int size = 0;                  // 2k
  int count = 0;                 // number of faces of this size
  double alpha1 = 0, alpha2 = 0; // planar interior angles at V1 / V2 vertices
  double beta1 = 0, beta2 = 0;   // spherical counterparts
  double eps = 0;                // (alpha1 - alpha2) / 2pi
  double alpha_reg = 0;          // (1 - 1/k) pi
  double height = 0;             // distance of the face plane from the origin
  double rho1 = 0, rho2 = 0;     // distances of V1 / V2 vertices from the foot point
};

struct AngleTable {
  std::map<int, FaceTypeAngles> by_size;
  double ell_spherical = 0;      // angle between adjacent vertices seen from the origin
};

class InconsistentAnglesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spherical angle beta from planar angle alpha at a vertex whose neighbours
/// have radius r_neighbor:  sin^2(ell_S) (1 - cos beta) = (ell / r_neighbor)^2 (1 - cos alpha).
double spherical_from_planar(double alpha, double ell, double r_neighbor, double ell_spherical);

/// Measures alpha per face size and class, checks that faces of one size agree,
/// and derives beta. Uses listed faces, or hull faces in dimension 3.
/// Throws InconsistentAnglesError when faces of one size differ.
AngleTable angle_table(const Polytope& p, const BipartiteReport& report, const Tolerance& tol = {});

struct TypeSignature {
  std::vector<int> entries;  // sorted face sizes
  std::vector<int> cyclic;   // face sizes in cyclic order around the vertex (3D only)
  /// Cyclic order alternates between two sizes, as in (4,6,4,6).
  bool alternating() const;
  std::string str() const;   // "(4,6,4,6)"
  friend bool operator==(const TypeSignature& a, const TypeSignature& b) { return a.entries == b.entries; }
};

struct VertexTypes {
  std::vector<TypeSignature> vertex;
  std::map<Edge, std::vector<int>> edge;  // sorted sizes of the faces at each edge
  /// type string -> number of vertices
  std::map<std::string, int> census() const;
};

/// Face sizes around each vertex and at each edge.
VertexTypes vertex_types(const Polytope& p);

/// Every vertex's spherical angles sum to 2pi, and every face size 2k satisfies
/// k beta1 + k beta2 > 2(k - 1) pi. Throws std::domain_error if the origin is
/// not interior.
bool check_spherical_sums(const Polytope& p, const BipartiteReport& report, const AngleTable& table,
                          const Tolerance& tol = Tolerance(1e-8));

nlohmann::json to_json(const TypeSignature& t);
nlohmann::json to_json(const AngleTable& t);
nlohmann::json bipartite_json(const Polytope& p, const BipartiteVerdict& v);

}  // namespace bipoly
