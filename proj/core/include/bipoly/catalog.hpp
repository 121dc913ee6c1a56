#pragma once

#include "bipoly/polytope.hpp"
#include "bipoly/reflection_group.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bipoly {

/// 2k-gon with vertex i at angle i*pi/k and radius alternating r1, r2.
/// Throws std::invalid_argument unless 0 < r1 <= r2, k >= 2 and the polygon is
/// strictly convex (r1 > r2 cos(pi/k)).
Polytope bipartite_polygon(double r1, double r2, int k);

/// Regular 2k-gon with the given edge length.
Polytope regular_polygon(int k, double edge = 1.0);

/// {+-half_edge}^d with its edges and square 2-faces.
Polytope cube(int d, double half_edge = 1.0);

/// Single point in R^0; the unit for cartesian_product.
Polytope point();

/// Vertices are concatenations (index i * |V(Q)| + j). Edges are edge x vertex
/// and vertex x edge; 2-faces are edge x edge squares plus face x vertex and
/// vertex x face copies.
Polytope cartesian_product(const Polytope& p, const Polytope& q);

/// `folds`-fold product of the regular 2k-gon with unit edge.
Polytope hyperprism(int k, int folds);

/// Convex hull of the orbit of `seed` (default: equidistant from all mirrors),
/// rescaled to unit minimum edge length. Edges join T v and T s_i v; 2-faces
/// are the orbits of rank-2 parabolic subgroups.
/// Throws std::domain_error for a non-generic seed and GroupTooLargeError when
/// the group exceeds the element cap.
Polytope permutahedron(const GroupDescriptor& g, std::optional<Point> seed = std::nullopt);

/// Cube of half-edge 1 stretched by `stretch` along its long diagonal.
Polytope rhombic_hexahedron(double stretch);

Polytope rhombic_dodecahedron();
/// Zonohedra generated by unit vectors along 6, 4 and 5 of the six five-fold
/// axes of the icosahedron.
Polytope rhombic_triacontahedron();
Polytope bilinski_dodecahedron();
Polytope rhombic_icosahedron();

/// Minkowski sum of the segments [-g/2, g/2]. No three generators may be coplanar.
Polytope zonohedron(const std::vector<Eigen::Vector3d>& generators, const std::string& provenance);

/// The icosahedron with vertices at the cyclic permutations of (0, +-phi, +-1).
Polytope icosahedron_from_cube();

/// The six five-fold axes, one unit vector per antipodal pair.
std::vector<Eigen::Vector3d> icosahedral_axes();

using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntry {
  std::string name;
  std::string summary;
  std::vector<std::string> params;  // accepted parameter names
};

const std::vector<CatalogEntry>& catalog_entries();

/// Build a registry entry by name. Unknown names, unknown parameters and
/// unparsable values throw std::invalid_argument.
Polytope build_catalog(const std::string& name, const CatalogParams& params = {});

}  // namespace bipoly
