#pragma once

#include "bipoly/tolerance.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bipoly {

using Point = Eigen::VectorXd;
/// Unordered vertex pair, stored with first < second.
using Edge = std::array<int, 2>;
/// Vertex indices of a 2-face in cyclic order.
using FaceCycle = std::vector<int>;

inline Edge make_edge(int i, int j) { return i < j ? Edge{i, j} : Edge{j, i}; }

/// Vertex coordinates plus combinatorial edges and (optionally) 2-faces.
///
/// Immutable once built. The constructor only checks structural consistency
/// (indices, dimensions, finiteness); geometric validity is checked separately
/// by validate_polytope() because it needs LP solves.
class Polytope {
 public:
  Polytope() = default;
  Polytope(int dim, std::vector<Point> vertices, std::vector<Edge> edges,
           std::vector<FaceCycle> faces = {}, std::string provenance = {});

  int dim() const { return dim_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_.at(static_cast<std::size_t>(i)); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<FaceCycle>& faces() const { return faces_; }
  bool has_faces() const { return !faces_.empty(); }
  const std::string& provenance() const { return provenance_; }

  Point centroid() const;
  /// Largest vertex norm.
  double circumradius() const;

  Polytope with_provenance(std::string provenance) const;
  Polytope with_edges(std::vector<Edge> edges) const;
  Polytope with_faces(std::vector<FaceCycle> faces) const;
  /// x -> M x applied to every vertex; combinatorics unchanged.
  Polytope transformed(const Eigen::MatrixXd& M, const std::string& note) const;
  Polytope translated(const Point& shift, const std::string& note) const;
  Polytope scaled(double factor) const;

 private:
  int dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
  std::vector<FaceCycle> faces_;
  std::string provenance_;
};

/// Simple undirected graph on the vertices of a polytope.
class EdgeGraph {
 public:
  explicit EdgeGraph(const Polytope& p);
  EdgeGraph(int num_vertices, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  bool is_connected() const;
  /// Color 0/1 per vertex with vertex 0 colored 0, or nullopt if an odd cycle exists.
  std::optional<std::vector<int>> two_coloring() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

/// Finds points of a fixed set within a distance tolerance.
class VertexLocator {
 public:
  VertexLocator(const std::vector<Point>& points, double tol);
  /// Index of a stored point within tol of x, if any.
  std::optional<int> find(const Point& x) const;

 private:
  const std::vector<Point>* points_;
  std::vector<std::pair<double, int>> by_first_;
  double tol_;
};

}  // namespace bipoly
