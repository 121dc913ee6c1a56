#pragma once

#include "bipoly/polytope.hpp"

#include <array>
#include <vector>

namespace bipoly {

/// Positive coefficients a_0..a_d with sum a_i x_i = 0 for d+1 vectors in R^d
/// whose pairwise inner products are all negative.
///
/// Computed by recursive projection onto x_0's orthogonal complement. Throws
/// std::invalid_argument when the count is not d+1, a vector is zero, or some
/// pairwise inner product is >= 0.
std::vector<double> sum_to_zero_coefficients(const std::vector<Point>& vectors);

/// Interior face angles at a degree-3 vertex, ordered (a12, a23, a31): a_ij is
/// the angle between the edge directions u_i and u_j.
using FaceAngles = std::array<double, 3>;
/// Dihedral angles at the three edges e1, e2, e3 of a degree-3 vertex. Edge
/// e_j is shared by the faces (i j) and (j k).
using EdgeDihedrals = std::array<double, 3>;

/// Dihedral angles of a simple vertex from its three face angles.
/// Throws std::domain_error when no convex vertex realizes the angles.
EdgeDihedrals dihedral_from_interior_angles(const FaceAngles& angles);

/// Inverse of dihedral_from_interior_angles.
FaceAngles interior_angles_from_dihedral(const EdgeDihedrals& dihedrals);

}  // namespace bipoly
