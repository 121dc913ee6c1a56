#include "bipoly/predicates.hpp"

#include "bipoly/hull3d.hpp"
#include "bipoly/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipoly {
namespace {

constexpr double kEdgeWeightEps = 1e-7;

void check_index(const Polytope& p, int i) {
  if (i < 0 || i >= p.num_vertices()) throw std::out_of_range("vertex index out of range");
}

}  // namespace

std::vector<FaceCycle> two_faces(const Polytope& p) {
  if (p.has_faces()) return p.faces();
  if (p.dim() == 3) return faces_3d(p);
  if (p.dim() == 2) {
    // polygon: the polytope is its own 2-face; order by angle around the centroid
    const Point c = p.centroid();
    std::vector<std::pair<double, int>> order;
    for (int i = 0; i < p.num_vertices(); ++i) {
      const Point d = p.vertex(i) - c;
      order.emplace_back(std::atan2(d(1), d(0)), i);
    }
    std::sort(order.begin(), order.end());
    FaceCycle f;
    for (const auto& [a, i] : order) f.push_back(i);
    return {f};
  }
  throw std::invalid_argument("2-faces not available for this polytope");
}

bool is_edge(const Polytope& p, int i, int j) {
  check_index(p, i);
  check_index(p, j);
  if (i == j) throw std::invalid_argument("is_edge: i == j");
  const int n = p.num_vertices();
  const int d = p.dim();
  Eigen::MatrixXd A(d + 1, n);
  for (int k = 0; k < n; ++k) {
    A.block(0, k, d, 1) = p.vertex(k);
    A(d, k) = 1.0;
  }
  Eigen::VectorXd b(d + 1);
  b.head(d) = 0.5 * (p.vertex(i) + p.vertex(j));
  b(d) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Ones(n);
  c(i) = 0.0;
  c(j) = 0.0;
  const LpSolution sol = maximize(A, b, c);
  if (sol.status != LpStatus::kOptimal) throw LpError("is_edge: midpoint system not solvable");
  return sol.objective <= kEdgeWeightEps;
}

std::vector<Edge> derive_edges(const Polytope& p) {
  std::vector<Edge> out;
  for (int i = 0; i < p.num_vertices(); ++i) {
    for (int j = i + 1; j < p.num_vertices(); ++j) {
      if (is_edge(p, i, j)) out.push_back({i, j});
    }
  }
  return out;
}

bool contains_origin_interior(const Polytope& p) {
  // lambda_k = t + mu_k with mu >= 0; maximize the common floor t.
  const int n = p.num_vertices();
  const int d = p.dim();
  if (n == 0) return false;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d + 1, n + 1);
  Point sum = Point::Zero(d);
  for (int k = 0; k < n; ++k) {
    A.block(0, k, d, 1) = p.vertex(k);
    A(d, k) = 1.0;
    sum += p.vertex(k);
  }
  A.block(0, n, d, 1) = sum;
  A(d, n) = static_cast<double>(n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(d + 1);
  b(d) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
  c(n) = 1.0;
  const LpSolution sol = maximize(A, b, c);
  if (sol.status != LpStatus::kOptimal) return false;
  return sol.objective * n > 1e-9 && affine_rank(p.vertices()) == d;
}

int affine_rank(const std::vector<Point>& points, double rel_tol) {
  if (points.size() <= 1) return 0;
  const auto dim = points.front().size();
  Eigen::MatrixXd M(dim, static_cast<Eigen::Index>(points.size() - 1));
  for (std::size_t k = 1; k < points.size(); ++k) M.col(static_cast<Eigen::Index>(k - 1)) = points[k] - points[0];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

bool in_convex_position(const Polytope& p) {
  const int n = p.num_vertices();
  const int d = p.dim();
  if (n <= 1) return true;
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXd A(d + 1, n - 1);
    int col = 0;
    for (int m = 0; m < n; ++m) {
      if (m == k) continue;
      A.block(0, col, d, 1) = p.vertex(m);
      A(d, col) = 1.0;
      ++col;
    }
    Eigen::VectorXd b(d + 1);
    b.head(d) = p.vertex(k);
    b(d) = 1.0;
    if (is_feasible(A, b)) return false;
  }
  return true;
}

Eigen::Vector3d face_normal(const Polytope& p, const FaceCycle& face) {
  if (p.dim() != 3) throw std::invalid_argument("face_normal: polytope must be 3-dimensional");
  Eigen::Vector3d n = Eigen::Vector3d::Zero();
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (std::size_t k = 0; k < face.size(); ++k) {
    const Eigen::Vector3d a = p.vertex(face[k]);
    const Eigen::Vector3d b = p.vertex(face[(k + 1) % face.size()]);
    n += a.cross(b);
    c += a;
  }
  c /= static_cast<double>(face.size());
  n.normalize();
  const Eigen::Vector3d inner = p.centroid();
  if (n.dot(inner - c) > 0) n = -n;
  return n;
}

double face_planarity_error(const Polytope& p, const FaceCycle& face) {
  Point c = Point::Zero(p.dim());
  for (int i : face) c += p.vertex(i);
  c /= static_cast<double>(face.size());
  Eigen::MatrixXd M(p.dim(), static_cast<Eigen::Index>(face.size()));
  for (std::size_t k = 0; k < face.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = p.vertex(face[k]) - c;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& s = svd.singularValues();
  double err = 0.0;
  for (Eigen::Index k = 2; k < s.size(); ++k) err = std::max(err, s(k));
  return err;
}

std::vector<std::string> validate_polytope(const Polytope& p, const Tolerance& tol) {
  std::vector<std::string> problems;
  if (p.num_vertices() <= p.dim()) problems.emplace_back("too few vertices to span the ambient space");
  if (affine_rank(p.vertices()) != p.dim()) problems.emplace_back("vertices do not affinely span the ambient space");
  if (!in_convex_position(p)) problems.emplace_back("vertices are not in convex position");
  for (const auto& e : p.edges()) {
    if (!is_edge(p, e[0], e[1])) {
      problems.push_back("listed edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                         ") fails the adjacency oracle");
    }
  }
  const double scale = std::max(1.0, p.circumradius());
  for (std::size_t k = 0; k < p.faces().size(); ++k) {
    if (face_planarity_error(p, p.faces()[k]) > tol.abs_eps() * scale) {
      problems.push_back("face " + std::to_string(k) + " is not planar");
    }
  }
  return problems;
}

double dihedral_angle(const Polytope& p, const Edge& e) {
  if (p.dim() != 3) throw std::invalid_argument("dihedral_angle: polytope must be 3-dimensional");
  const Edge key = make_edge(e[0], e[1]);
  const auto faces = two_faces(p);
  std::vector<const FaceCycle*> incident;
  for (const auto& f : faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (make_edge(f[k], f[(k + 1) % f.size()]) == key) {
        incident.push_back(&f);
        break;
      }
    }
  }
  if (incident.size() != 2) {
    throw std::invalid_argument("dihedral_angle: edge is incident to " + std::to_string(incident.size()) +
                                " faces, expected 2");
  }
  const Eigen::Vector3d n1 = face_normal(p, *incident[0]);
  const Eigen::Vector3d n2 = face_normal(p, *incident[1]);
  return std::numbers::pi - std::acos(std::clamp(n1.dot(n2), -1.0, 1.0));
}

bool centrally_symmetric_2faces(const Polytope& p, const Tolerance& tol) {
  const double scale = std::max(1.0, p.circumradius());
  for (const auto& f : two_faces(p)) {
    Point c = Point::Zero(p.dim());
    for (int i : f) c += p.vertex(i);
    c /= static_cast<double>(f.size());
    for (int i : f) {
      const Point mirror = 2.0 * c - p.vertex(i);
      bool found = false;
      for (int j : f) {
        if ((p.vertex(j) - mirror).norm() <= tol.abs_eps() * scale) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace bipoly
