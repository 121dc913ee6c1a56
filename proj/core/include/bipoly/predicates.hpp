#pragma once

#include "bipoly/polytope.hpp"
#include "bipoly/tolerance.hpp"

#include <string>
#include <vector>

namespace bipoly {

/// True iff [v_i, v_j] is an edge of conv(vertices).
///
/// Decided by one LP: the midpoint (v_i + v_j)/2 is written as a convex
/// combination of all vertices while maximizing the weight placed outside
/// {i, j}. The segment is an edge iff that maximum is zero. Throws
/// std::out_of_range for bad indices and std::invalid_argument for i == j.
bool is_edge(const Polytope& p, int i, int j);

/// All vertex pairs passing is_edge, sorted.
std::vector<Edge> derive_edges(const Polytope& p);

/// True iff the origin lies strictly inside conv(vertices) (full-dimensional case).
bool contains_origin_interior(const Polytope& p);

/// Dimension of the affine hull of the vertices.
int affine_rank(const std::vector<Point>& points, double rel_tol = 1e-9);

/// True iff no vertex lies in the convex hull of the others.
bool in_convex_position(const Polytope& p);

/// Human-readable list of violated invariants (empty when valid): full
/// dimension, convex position, listed edges pass the adjacency oracle, and
/// face cycles are planar.
std::vector<std::string> validate_polytope(const Polytope& p, const Tolerance& tol = {});

/// 2-faces: the listed ones, else hull faces in dimension 3, else the polygon
/// itself in dimension 2. Throws std::invalid_argument otherwise.
std::vector<FaceCycle> two_faces(const Polytope& p);

/// Outward unit normal of a 2-face of a 3-polytope (Newell's method).
Eigen::Vector3d face_normal(const Polytope& p, const FaceCycle& face);

/// Largest distance of a face vertex from the face's best-fit plane.
double face_planarity_error(const Polytope& p, const FaceCycle& face);

/// Interior dihedral angle (radians, in (0, pi)) at an edge of a 3-polytope.
/// Uses p.faces() when present, otherwise the hull faces. Throws
/// std::invalid_argument if the edge is not incident to exactly two faces.
double dihedral_angle(const Polytope& p, const Edge& e);

/// True iff every 2-face equals its reflection through its vertex centroid.
/// A polygon (dim 2) is its own single 2-face; 3-polytopes without listed
/// faces use hull faces; higher dimensions require listed faces.
bool centrally_symmetric_2faces(const Polytope& p, const Tolerance& tol = {});

}  // namespace bipoly
