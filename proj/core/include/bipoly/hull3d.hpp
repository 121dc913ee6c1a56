#pragma once

#include "bipoly/polytope.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

namespace bipoly {

class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HullFace {
  FaceCycle cycle;           // counter-clockwise when viewed from outside
  Eigen::Vector3d normal;    // unit, outward
  double offset = 0.0;       // normal . x = offset on the face plane
};

/// Facets of conv(points) in R^3 by exhaustive supporting-plane search.
///
/// Points lying on a facet plane within plane_tol (scaled by the point cloud's
/// radius) are all reported in that facet's cycle, so the input is expected to
/// be in convex position. O(n^4) worst case; fine for a few hundred points.
/// Throws DegenerateInputError when the points do not span R^3.
std::vector<HullFace> hull_faces_3d(const std::vector<Point>& points, double plane_tol = 1e-8);

/// 2-faces of a 3-polytope as outward-oriented vertex cycles.
std::vector<FaceCycle> faces_3d(const Polytope& p, double plane_tol = 1e-8);

/// Edges implied by consecutive vertices in face cycles, sorted.
std::vector<Edge> edges_from_faces(const std::vector<FaceCycle>& faces);

}  // namespace bipoly
