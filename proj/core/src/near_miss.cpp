#include "bipoly/near_miss.hpp"

#include "bipoly/bipartite.hpp"
#include "bipoly/catalog.hpp"
#include "bipoly/hull3d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bipoly {
namespace {

using Vec3 = Eigen::Vector3d;

struct Icosahedron {
  std::vector<Vec3> v;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> faces;
};

const Icosahedron& ico() {
  static const Icosahedron data = [] {
    const Polytope p = icosahedron_from_cube();
    Icosahedron d;
    for (const auto& x : p.vertices()) d.v.emplace_back(x);
    d.edges = p.edges();
    for (const auto& f : p.faces()) d.faces.push_back({f[0], f[1], f[2]});
    return d;
  }();
  return data;
}

Vec3 midpoint(int i, int j) { return 0.5 * (ico().v[static_cast<std::size_t>(i)] + ico().v[static_cast<std::size_t>(j)]); }

Vec3 face_center(const std::array<int, 3>& f) {
  return (ico().v[static_cast<std::size_t>(f[0])] + ico().v[static_cast<std::size_t>(f[1])] + ico().v[static_cast<std::size_t>(f[2])]) / 3.0;
}

// The 1-vertex of face f next to icosahedron vertex vi, for apex height t.
// It lies in the face plane on the face's mirror line through vi; its
// position along that line makes the quadrilateral (apex, b, m, b') planar,
// where m is the midpoint of the edge from vi to `other` (a vertex of f).
Vec3 one_vertex(double t, int vi, const std::array<int, 3>& f, int other) {
  const Vec3 v = ico().v[static_cast<std::size_t>(vi)];
  const Vec3 a = t * v.normalized();
  const Vec3 m = midpoint(vi, other);
  const Vec3 fc = face_center(f);
  const Vec3 n = fc.normalized();
  const Vec3 mirror = v.cross(m).normalized();
  auto b = [&](double al) { return Vec3(al * v + ((n.dot(m) - al * n.dot(v)) / n.dot(fc)) * fc); };
  // planarity residual is affine in al
  auto residual = [&](double al) {
    const Vec3 bb = b(al);
    const Vec3 in_mirror = bb - bb.dot(mirror) * mirror;
    return (m - a).cross(in_mirror - a).dot(mirror);
  };
  const double r0 = residual(0.0), r1 = residual(1.0);
  return b(-r0 / (r1 - r0));
}

double line_distance(const Vec3& p, const Vec3& q) {
  const Vec3 d = q - p;
  return (p - d * (p.dot(d) / d.squaredNorm())).norm();
}

double variant_residual(NearMissVariant variant, double t) {
  const auto& I = ico();
  const auto& f = *std::find_if(I.faces.begin(), I.faces.end(), [](const auto& face) {
    return std::find(face.begin(), face.end(), 0) != face.end();
  });
  const int other = f[0] != 0 ? f[0] : f[1];
  const Vec3 a = t * I.v[0].normalized();
  const Vec3 b = one_vertex(t, 0, f, other);
  const Vec3 m = midpoint(0, other);
  if (variant == NearMissVariant::kEquilateral) return (a - b).norm() - (b - m).norm();
  return line_distance(a, b) - line_distance(b, m);
}

}  // namespace

NearMissVariant parse_variant(const std::string& name) {
  if (name == "tangent") return NearMissVariant::kTangent;
  if (name == "equilateral") return NearMissVariant::kEquilateral;
  throw std::invalid_argument("unknown variant '" + name + "' (expected tangent or equilateral)");
}

std::string to_string(NearMissVariant v) { return v == NearMissVariant::kTangent ? "tangent" : "equilateral"; }

GoldenNumber near_miss_identity() {
  const GoldenNumber phi = GoldenNumber::phi();
  const GoldenNumber y = GoldenNumber(4, 0) * phi - GoldenNumber::one() * GoldenNumber(3, 0);
  const GoldenNumber z = GoldenNumber(3, 0) * phi - GoldenNumber::one();
  const GoldenNumber sum = y * y + z * z;
  const GoldenNumber expanded = GoldenNumber(25, 0) * phi * phi - GoldenNumber(30, 0) * phi + GoldenNumber(10, 0);
  const GoldenNumber reduced(35, -55);
  const GoldenNumber power = GoldenNumber::one() + golden_pow(phi, 10);
  if (!(sum == expanded)) throw std::logic_error("near_miss_identity: expansion mismatch " + sum.str());
  if (!(expanded == reduced)) throw std::logic_error("near_miss_identity: reduction mismatch " + expanded.str());
  if (!(reduced == power)) throw std::logic_error("near_miss_identity: 1 + phi^10 mismatch " + power.str());
  return sum;
}

double apex_height(NearMissVariant variant) {
  const auto& I = ico();
  // between the plane of the five surrounding midpoints and the vertex itself
  const int other = I.edges.front()[1];
  double lo = midpoint(0, other).dot(I.v[0].normalized());
  // at t = |v| the apex coincides with b and the tangent residual is undefined
  double hi = lo + 0.999 * (I.v[0].norm() - lo);
  double rlo = variant_residual(variant, lo);
  const double rhi = variant_residual(variant, hi);
  if (!(rlo * rhi < 0)) throw std::runtime_error("apex_height: residual does not change sign on the bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double rm = variant_residual(variant, mid);
    if ((rm < 0) == (rlo < 0)) {
      lo = mid;
      rlo = rm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

Polytope construct_Q(NearMissVariant variant) {
  const auto& I = ico();
  const double t = apex_height(variant);

  std::vector<Vec3> pts;
  std::map<std::string, int> id;  // "a:v", "m:i,j", "b:v,f"
  auto add = [&](const std::string& key, const Vec3& x) {
    id[key] = static_cast<int>(pts.size());
    pts.push_back(x);
  };
  for (std::size_t v = 0; v < I.v.size(); ++v) add("a:" + std::to_string(v), t * I.v[v].normalized());
  for (const auto& e : I.edges) add("m:" + std::to_string(e[0]) + "," + std::to_string(e[1]), midpoint(e[0], e[1]));
  for (std::size_t fi = 0; fi < I.faces.size(); ++fi) {
    const auto& f = I.faces[fi];
    for (int k = 0; k < 3; ++k) {
      add("b:" + std::to_string(f[static_cast<std::size_t>(k)]) + "," + std::to_string(fi),
          one_vertex(t, f[static_cast<std::size_t>(k)], f, f[static_cast<std::size_t>((k + 1) % 3)]));
    }
  }
  auto M = [&](int i, int j) { const Edge e = make_edge(i, j); return id.at("m:" + std::to_string(e[0]) + "," + std::to_string(e[1])); };
  auto B = [&](int v, std::size_t fi) { return id.at("b:" + std::to_string(v) + "," + std::to_string(fi)); };

  std::vector<FaceCycle> faces;
  for (std::size_t fi = 0; fi < I.faces.size(); ++fi) {
    const auto& f = I.faces[fi];
    faces.push_back({B(f[0], fi), M(f[0], f[1]), B(f[1], fi), M(f[1], f[2]), B(f[2], fi), M(f[2], f[0])});
  }
  for (const auto& e : I.edges) {
    for (int side = 0; side < 2; ++side) {
      const int v = e[static_cast<std::size_t>(side)], w = e[static_cast<std::size_t>(1 - side)];
      std::vector<std::size_t> adj;
      for (std::size_t fi = 0; fi < I.faces.size(); ++fi) {
        const auto& f = I.faces[fi];
        if (std::count(f.begin(), f.end(), v) && std::count(f.begin(), f.end(), w)) adj.push_back(fi);
      }
      faces.push_back({id.at("a:" + std::to_string(v)), B(v, adj.at(0)), M(v, w), B(v, adj.at(1))});
    }
  }

  // canonical vertex order
  std::vector<int> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  auto rounded = [&](int i) {
    const Vec3& x = pts[static_cast<std::size_t>(i)];
    return std::array<long long, 3>{std::llround(x(0) * 1e9), std::llround(x(1) * 1e9), std::llround(x(2) * 1e9)};
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return rounded(a) < rounded(b); });
  std::vector<int> new_index(pts.size());
  std::vector<Point> vertices;
  for (std::size_t k = 0; k < order.size(); ++k) {
    new_index[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
    vertices.emplace_back(pts[static_cast<std::size_t>(order[k])]);
  }
  for (auto& f : faces) {
    for (int& i : f) i = new_index[static_cast<std::size_t>(i)];
  }
  // outward orientation
  for (auto& f : faces) {
    Vec3 n = Vec3::Zero(), c = Vec3::Zero();
    for (std::size_t k = 0; k < f.size(); ++k) {
      n += Vec3(vertices[static_cast<std::size_t>(f[k])]).cross(Vec3(vertices[static_cast<std::size_t>(f[(k + 1) % f.size()])]));
      c += vertices[static_cast<std::size_t>(f[k])];
    }
    if (n.dot(c) < 0) std::reverse(f.begin(), f.end());
  }
  auto edges = edges_from_faces(faces);
  Polytope q(3, std::move(vertices), std::move(edges), std::move(faces), "near-miss(" + to_string(variant) + ")");
  if (q.num_vertices() != 102 || q.num_edges() != 180 || q.num_faces() != 80) {
    throw std::logic_error("construct_Q: unexpected face lattice counts");
  }
  return q;
}

ApexProjection project_apex(const Polytope& q) {
  const Vec3 axis = Vec3(0, -kPhi, 1).normalized();
  std::optional<int> apex;
  for (int i = 0; i < q.num_vertices(); ++i) {
    const Vec3 x = q.vertex(i);
    if (x.cross(axis).norm() < 1e-9 * x.norm() && x.dot(axis) > 0) apex = i;
  }
  if (!apex) throw std::invalid_argument("project_apex: no vertex on the axis through (0, -phi, 1)");

  ApexProjection out;
  const GoldenNumber phi = GoldenNumber::phi();
  out.exact = {GoldenNumber(4, 0) * phi - GoldenNumber(3, 0), GoldenNumber(3, 0) * phi - GoldenNumber::one()};
  const ProjectedPoint C{GoldenNumber(0, 0), GoldenNumber::one()};
  const GoldenNumber half(Rational(1, 2), Rational(0));
  out.midpoint_exact = {(out.exact.y + C.y) * half, (out.exact.z + C.z) * half};

  const Vec3 a = q.vertex(*apex);
  out.measured = {a(1), a(2)};
  // a neighbour of the apex lying on the negative-y side of the x = 0 mirror
  const EdgeGraph g(q);
  Eigen::Vector2d b_sum = Eigen::Vector2d::Zero();
  int nb_count = 0;
  for (int w : g.neighbors(*apex)) {
    const Vec3 b = q.vertex(w);
    // the two 1-vertices in the kite through C = (0, 0, 1)
    for (int u : g.neighbors(w)) {
      const Vec3 m = q.vertex(u);
      if ((m - Vec3(0, 0, 1)).norm() < 1e-9) {
        b_sum += Eigen::Vector2d(b(1), b(2));
        ++nb_count;
      }
    }
  }
  if (nb_count != 2) throw std::invalid_argument("project_apex: kite through (0, 0, 1) not found");
  out.midpoint_measured = b_sum / 2.0;

  const Eigen::Vector2d ex(out.exact.y.to_double(), out.exact.z.to_double());
  const Eigen::Vector2d bx(out.midpoint_exact.y.to_double(), out.midpoint_exact.z.to_double());
  out.deviation = std::max((out.measured - ex).norm(), (out.midpoint_measured - bx).norm());
  return out;
}

NearMissReport near_miss_report(NearMissVariant variant) {
  NearMissReport r;
  r.variant = variant;
  r.oa_sq_exact = near_miss_identity();
  r.oa_float = std::sqrt(r.oa_sq_exact.to_double());
  r.oc = 1.0;
  r.ratio = r.oa_float / r.oc;
  r.gap_percent = (r.ratio - 1.0) * 100.0;
  r.apex_height = apex_height(variant);

  const Polytope q = construct_Q(variant);
  const EdgeGraph g(q);
  double v1_lo = 1e300, v1_hi = 0, apex_r = 0, mid_r = 0, v2_lo = 1e300, v2_hi = 0, e_lo = 1e300, e_hi = 0;
  for (int i = 0; i < q.num_vertices(); ++i) {
    const double n = q.vertex(i).norm();
    if (g.degree(i) == 3) {
      v1_lo = std::min(v1_lo, n);
      v1_hi = std::max(v1_hi, n);
    } else {
      v2_lo = std::min(v2_lo, n);
      v2_hi = std::max(v2_hi, n);
      (g.degree(i) == 5 ? apex_r : mid_r) = n;
    }
  }
  for (const auto& e : q.edges()) {
    const double l = (q.vertex(e[0]) - q.vertex(e[1])).norm();
    e_lo = std::min(e_lo, l);
    e_hi = std::max(e_hi, l);
  }
  r.measured_ratio = apex_r / mid_r;
  r.v1_radius_spread = v1_hi / v1_lo - 1.0;
  r.v2_radius_spread = v2_hi / v2_lo - 1.0;
  r.edge_spread = e_hi / e_lo - 1.0;
  const auto [d_lo, d_hi] = edge_distance_range(q);
  r.tangent = verify_edge_tangency(q, 0.5 * (d_lo + d_hi));
  const auto verdict = analyze_bipartite(q);
  r.bipartite = verdict.report.has_value();
  if (verdict.reason) r.reason = to_string(*verdict.reason);
  return r;
}

nlohmann::json to_json(const NearMissReport& r) {
  return {{"variant", to_string(r.variant)},
          {"oa_sq_exact", to_json(r.oa_sq_exact)},
          {"oa_sq_exact_str", r.oa_sq_exact.str()},
          {"oa", r.oa_float},
          {"oc", r.oc},
          {"ratio", r.ratio},
          {"gap_percent", r.gap_percent},
          {"apex_height", r.apex_height},
          {"measured_ratio", r.measured_ratio},
          {"v1_radius_spread", r.v1_radius_spread},
          {"v2_radius_spread", r.v2_radius_spread},
          {"edge_spread", r.edge_spread},
          {"edge_tangent_sphere", r.tangent},
          {"bipartite", r.bipartite},
          {"reason", r.reason}};
}

bool verify_local_types(const Polytope& q) {
  if (q.dim() != 3) return false;
  std::vector<FaceCycle> faces;
  try {
    faces = faces_3d(q);
  } catch (const DegenerateInputError&) {
    return false;
  }
  const Polytope hq(3, q.vertices(), edges_from_faces(faces), faces, q.provenance());
  const auto types = vertex_types(hq);
  const auto coloring = EdgeGraph(hq).two_coloring();
  if (!coloring) return false;
  int ones_color = -1;
  for (std::size_t v = 0; v < types.vertex.size(); ++v) {
    const auto& t = types.vertex[v];
    const bool one = t.entries == std::vector<int>{4, 4, 6};
    const bool two = (t.entries == std::vector<int>{4, 4, 6, 6} && t.alternating()) ||
                     t.entries == std::vector<int>{4, 4, 4, 4, 4};
    if (!one && !two) return false;
    const int c = (*coloring)[v];
    if (one) {
      if (ones_color >= 0 && ones_color != c) return false;
      ones_color = c;
    }
  }
  if (ones_color < 0) return false;
  for (std::size_t v = 0; v < types.vertex.size(); ++v) {
    const bool one = types.vertex[v].entries.size() == 3;
    if (one != ((*coloring)[v] == ones_color)) return false;
  }
  for (const auto& [e, sizes] : types.edge) {
    if (sizes == std::vector<int>{6, 6}) return false;
  }
  return true;
}

}  // namespace bipoly
