#include "bipoly/hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace bipoly {
namespace {

Eigen::Vector3d as3(const Point& p) { return {p(0), p(1), p(2)}; }

}  // namespace

std::vector<HullFace> hull_faces_3d(const std::vector<Point>& points, double plane_tol) {
  const int n = static_cast<int>(points.size());
  if (n < 4) throw DegenerateInputError("hull_faces_3d: need at least 4 points");
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(points.size());
  double scale = 0.0;
  for (const auto& p : points) {
    if (p.size() != 3) throw std::invalid_argument("hull_faces_3d: points must be 3-dimensional");
    pts.push_back(as3(p));
  }
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  for (const auto& p : pts) center += p;
  center /= n;
  for (const auto& p : pts) scale = std::max(scale, (p - center).norm());
  if (scale == 0.0) throw DegenerateInputError("hull_faces_3d: all points coincide");
  const double tol = plane_tol * scale;

  std::vector<HullFace> faces;
  std::set<std::vector<int>> seen;
  bool spans = false;

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        Eigen::Vector3d normal = (pts[j] - pts[i]).cross(pts[k] - pts[i]);
        const double len = normal.norm();
        if (len <= 1e-12 * scale * scale) continue;
        normal /= len;
        const double offset = normal.dot(pts[i]);
        bool above = false, below = false;
        for (int m = 0; m < n && !(above && below); ++m) {
          const double s = normal.dot(pts[m]) - offset;
          if (s > tol) above = true;
          else if (s < -tol) below = true;
        }
        if (above || below) spans = true;
        if (above && below) continue;
        if (!above && !below) continue;  // all coplanar
        if (above) normal = -normal;
        std::vector<int> on_plane;
        const double off = normal.dot(pts[i]);
        for (int m = 0; m < n; ++m) {
          if (std::abs(normal.dot(pts[m]) - off) <= tol) on_plane.push_back(m);
        }
        if (!seen.insert(on_plane).second) continue;

        Eigen::Vector3d c = Eigen::Vector3d::Zero();
        for (int m : on_plane) c += pts[m];
        c /= static_cast<double>(on_plane.size());
        const Eigen::Vector3d u = (pts[on_plane.front()] - c).normalized();
        const Eigen::Vector3d w = normal.cross(u);
        std::vector<std::pair<double, int>> by_angle;
        for (int m : on_plane) {
          const Eigen::Vector3d d = pts[m] - c;
          by_angle.emplace_back(std::atan2(d.dot(w), d.dot(u)), m);
        }
        std::sort(by_angle.begin(), by_angle.end());
        HullFace f;
        for (const auto& [angle, m] : by_angle) f.cycle.push_back(m);
        f.normal = normal;
        f.offset = off;
        faces.push_back(std::move(f));
      }
    }
  }
  if (!spans || faces.size() < 4) throw DegenerateInputError("hull_faces_3d: points do not span R^3");
  return faces;
}

std::vector<FaceCycle> faces_3d(const Polytope& p, double plane_tol) {
  if (p.dim() != 3) throw std::invalid_argument("faces_3d: polytope must be 3-dimensional");
  std::vector<FaceCycle> out;
  for (auto& f : hull_faces_3d(p.vertices(), plane_tol)) out.push_back(std::move(f.cycle));
  return out;
}

std::vector<Edge> edges_from_faces(const std::vector<FaceCycle>& faces) {
  std::set<Edge> edges;
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) edges.insert(make_edge(f[i], f[(i + 1) % f.size()]));
  }
  return {edges.begin(), edges.end()};
}

}  // namespace bipoly
