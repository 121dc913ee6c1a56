#include "bipoly/polytope.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace bipoly {

Polytope::Polytope(int dim, std::vector<Point> vertices, std::vector<Edge> edges,
                   std::vector<FaceCycle> faces, std::string provenance)
    : dim_(dim),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      provenance_(std::move(provenance)) {
  if (dim_ < 0) throw std::invalid_argument("Polytope: negative dimension");
  const int n = num_vertices();
  for (const auto& v : vertices_) {
    if (v.size() != dim_) throw std::invalid_argument("Polytope: vertex dimension mismatch");
    if (!v.allFinite()) throw std::invalid_argument("Polytope: non-finite coordinate");
  }
  std::set<Edge> seen;
  for (auto& e : edges_) {
    if (e[0] == e[1]) throw std::invalid_argument("Polytope: loop edge");
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n) {
      throw std::invalid_argument("Polytope: edge index out of range");
    }
    e = make_edge(e[0], e[1]);
    if (!seen.insert(e).second) throw std::invalid_argument("Polytope: duplicate edge");
  }
  std::sort(edges_.begin(), edges_.end());
  for (const auto& f : faces_) {
    if (f.size() < 3) throw std::invalid_argument("Polytope: face with fewer than 3 vertices");
    for (int i : f) {
      if (i < 0 || i >= n) throw std::invalid_argument("Polytope: face index out of range");
    }
  }
}

Point Polytope::centroid() const {
  Point c = Point::Zero(dim_);
  if (vertices_.empty()) return c;
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double Polytope::circumradius() const {
  double r = 0.0;
  for (const auto& v : vertices_) r = std::max(r, v.norm());
  return r;
}

Polytope Polytope::with_provenance(std::string provenance) const {
  Polytope p = *this;
  p.provenance_ = std::move(provenance);
  return p;
}

Polytope Polytope::with_edges(std::vector<Edge> edges) const {
  return Polytope(dim_, vertices_, std::move(edges), faces_, provenance_);
}

Polytope Polytope::with_faces(std::vector<FaceCycle> faces) const {
  return Polytope(dim_, vertices_, edges_, std::move(faces), provenance_);
}

Polytope Polytope::transformed(const Eigen::MatrixXd& M, const std::string& note) const {
  if (M.rows() != dim_ || M.cols() != dim_) throw std::invalid_argument("Polytope::transformed: shape");
  std::vector<Point> vs;
  vs.reserve(vertices_.size());
  for (const auto& v : vertices_) vs.emplace_back(M * v);
  return Polytope(dim_, std::move(vs), edges_, faces_,
                  note.empty() ? provenance_ : provenance_ + "; " + note);
}

Polytope Polytope::translated(const Point& shift, const std::string& note) const {
  std::vector<Point> vs;
  vs.reserve(vertices_.size());
  for (const auto& v : vertices_) vs.emplace_back(v + shift);
  return Polytope(dim_, std::move(vs), edges_, faces_,
                  note.empty() ? provenance_ : provenance_ + "; " + note);
}

Polytope Polytope::scaled(double factor) const {
  std::vector<Point> vs;
  vs.reserve(vertices_.size());
  for (const auto& v : vertices_) vs.emplace_back(factor * v);
  return Polytope(dim_, std::move(vs), edges_, faces_, provenance_);
}

EdgeGraph::EdgeGraph(const Polytope& p) : EdgeGraph(p.num_vertices(), p.edges()) {}

EdgeGraph::EdgeGraph(int num_vertices, const std::vector<Edge>& edges)
    : adjacency_(static_cast<std::size_t>(num_vertices)) {
  for (const auto& e : edges) {
    adjacency_.at(static_cast<std::size_t>(e[0])).push_back(e[1]);
    adjacency_.at(static_cast<std::size_t>(e[1])).push_back(e[0]);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool EdgeGraph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool EdgeGraph::is_connected() const {
  if (adjacency_.empty()) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == adjacency_.size();
}

std::optional<std::vector<int>> EdgeGraph::two_coloring() const {
  std::vector<int> color(adjacency_.size(), -1);
  for (std::size_t start = 0; start < adjacency_.size(); ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : neighbors(u)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - color[static_cast<std::size_t>(u)];
          q.push(w);
        } else if (cw == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

VertexLocator::VertexLocator(const std::vector<Point>& points, double tol) : points_(&points), tol_(tol) {
  by_first_.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    by_first_.emplace_back(points[i].size() > 0 ? points[i](0) : 0.0, static_cast<int>(i));
  }
  std::sort(by_first_.begin(), by_first_.end());
}

std::optional<int> VertexLocator::find(const Point& x) const {
  const double key = x.size() > 0 ? x(0) : 0.0;
  auto it = std::lower_bound(by_first_.begin(), by_first_.end(), std::make_pair(key - tol_, -1));
  for (; it != by_first_.end() && it->first <= key + tol_; ++it) {
    if (((*points_)[static_cast<std::size_t>(it->second)] - x).norm() <= tol_) return it->second;
  }
  return std::nullopt;
}

}  // namespace bipoly
