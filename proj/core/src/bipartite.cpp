#include "bipoly/bipartite.hpp"

#include "bipoly/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bipoly {
namespace {

constexpr double kPi = std::numbers::pi;

double angle_at(const Point& prev, const Point& v, const Point& next) {
  const Point a = prev - v, b = next - v;
  return std::acos(std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0));
}

// Foot of the perpendicular from the origin onto the affine hull of a face.
Point face_foot(const Polytope& p, const FaceCycle& f) {
  Point c = Point::Zero(p.dim());
  for (int i : f) c += p.vertex(i);
  c /= static_cast<double>(f.size());
  Eigen::MatrixXd M(p.dim(), static_cast<Eigen::Index>(f.size()));
  for (std::size_t k = 0; k < f.size(); ++k) M.col(static_cast<Eigen::Index>(k)) = p.vertex(f[k]) - c;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
  const Eigen::MatrixXd U = svd.matrixU().leftCols(std::min<Eigen::Index>(2, svd.matrixU().cols()));
  return c - U * (U.transpose() * c);
}

struct Spread {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  bool empty() const { return lo > hi; }
  double mid() const { return 0.5 * (lo + hi); }
};

}  // namespace

std::string to_string(NonBipartiteReason reason) {
  switch (reason) {
    case NonBipartiteReason::kUnequalEdges: return "UNEQUAL_EDGES";
    case NonBipartiteReason::kOddCycle: return "ODD_CYCLE";
    case NonBipartiteReason::kRadiusSpread: return "RADIUS_SPREAD";
  }
  return "UNKNOWN";
}

BipartiteVerdict analyze_bipartite(const Polytope& p, const Tolerance& tol) {
  BipartiteVerdict out;
  auto fail = [&](NonBipartiteReason r, std::string detail) {
    out.reason = r;
    out.detail = std::move(detail);
    return out;
  };
  if (p.num_edges() == 0) return fail(NonBipartiteReason::kUnequalEdges, "no edges");

  Spread len;
  for (const auto& e : p.edges()) len.add((p.vertex(e[0]) - p.vertex(e[1])).norm());
  if (!tol.close(len.lo, len.hi)) {
    std::ostringstream os;
    os << "edge lengths range over [" << len.lo << ", " << len.hi << "]";
    return fail(NonBipartiteReason::kUnequalEdges, os.str());
  }
  const auto coloring = EdgeGraph(p).two_coloring();
  if (!coloring) return fail(NonBipartiteReason::kOddCycle, "edge graph has an odd cycle");

  std::array<Spread, 2> radius;
  for (int i = 0; i < p.num_vertices(); ++i) radius[static_cast<std::size_t>((*coloring)[static_cast<std::size_t>(i)])].add(p.vertex(i).norm());
  for (int c = 0; c < 2; ++c) {
    if (!radius[static_cast<std::size_t>(c)].empty() && !tol.close(radius[static_cast<std::size_t>(c)].lo, radius[static_cast<std::size_t>(c)].hi)) {
      std::ostringstream os;
      os << "vertex norms in one colour class range over [" << radius[static_cast<std::size_t>(c)].lo << ", "
         << radius[static_cast<std::size_t>(c)].hi << "]";
      return fail(NonBipartiteReason::kRadiusSpread, os.str());
    }
  }
  const double ra = radius[0].mid(), rb = radius[1].empty() ? ra : radius[1].mid();
  const bool strict = !tol.close(ra, rb);
  const int v1_color = strict && rb < ra ? 1 : 0;

  BipartiteReport rep;
  rep.class_of.resize(static_cast<std::size_t>(p.num_vertices()));
  for (int i = 0; i < p.num_vertices(); ++i) {
    const int cls = (*coloring)[static_cast<std::size_t>(i)] == v1_color ? 0 : 1;
    rep.class_of[static_cast<std::size_t>(i)] = cls;
    rep.classes[static_cast<std::size_t>(cls)].push_back(i);
  }
  rep.strict = strict;
  auto& pr = rep.params;
  pr.r1 = std::min(ra, rb);
  pr.r2 = std::max(ra, rb);
  pr.ell = len.mid();
  pr.ell1 = (pr.r1 * pr.r1 - pr.r2 * pr.r2 + pr.ell * pr.ell) / (2 * pr.ell);
  pr.ell2 = pr.ell - pr.ell1;
  pr.rho = std::sqrt(std::max(0.0, pr.r1 * pr.r1 - pr.ell1 * pr.ell1));
  out.report = std::move(rep);
  return out;
}

BipartiteParameters insphere_from_three(double r1, double r2, double ell) {
  if (!(r1 > 0 && r2 > 0 && ell > 0)) throw std::domain_error("insphere_from_three: lengths must be positive");
  BipartiteParameters p{r1, r2, ell, 0, 0, 0};
  p.ell1 = (r1 * r1 - r2 * r2 + ell * ell) / (2 * ell);
  p.ell2 = ell - p.ell1;
  if (!(p.ell1 > 0 && p.ell2 > 0)) {
    throw std::domain_error("insphere_from_three: perpendicular foot lies outside the edge");
  }
  const double rho2 = r1 * r1 - p.ell1 * p.ell1;
  if (!(rho2 > 0)) throw std::domain_error("insphere_from_three: degenerate triangle");
  p.rho = std::sqrt(rho2);
  return p;
}

bool verify_edge_tangency(const Polytope& p, double rho, const Tolerance& tol) {
  for (const auto& e : p.edges()) {
    const Point a = p.vertex(e[0]);
    const Point d = p.vertex(e[1]) - a;
    const double s = -a.dot(d) / d.squaredNorm();
    if (!(s > 0.0 && s < 1.0)) return false;
    if (!tol.close((a + s * d).norm(), rho)) return false;
  }
  return true;
}

bool verify_edge_tangency(const Polytope& p, const BipartiteReport& report, const Tolerance& tol) {
  return verify_edge_tangency(p, report.params.rho, tol);
}

std::pair<double, double> edge_distance_range(const Polytope& p) {
  Spread s;
  for (const auto& e : p.edges()) {
    const Point a = p.vertex(e[0]);
    const Point d = p.vertex(e[1]) - a;
    s.add((a - d * (a.dot(d) / d.squaredNorm())).norm());
  }
  return {s.lo, s.hi};
}

double spherical_from_planar(double alpha, double ell, double r_neighbor, double ell_spherical) {
  const double s = std::sin(ell_spherical);
  const double chi = (ell / r_neighbor) * (ell / r_neighbor) * (1.0 - std::cos(alpha)) / (s * s);
  if (chi > 2.0 + 1e-12) throw std::domain_error("spherical_from_planar: no spherical angle for these lengths");
  return std::acos(std::clamp(1.0 - chi, -1.0, 1.0));
}

AngleTable angle_table(const Polytope& p, const BipartiteReport& report, const Tolerance& tol) {
  const auto faces = two_faces(p);
  const auto& prm = report.params;
  AngleTable table;
  table.ell_spherical = std::acos(std::clamp((prm.r1 * prm.r1 + prm.r2 * prm.r2 - prm.ell * prm.ell) /
                                                 (2 * prm.r1 * prm.r2), -1.0, 1.0));
  std::map<int, std::array<Spread, 2>> alpha, rho;
  std::map<int, Spread> height;
  std::map<int, int> count;
  for (const auto& f : faces) {
    const int size = static_cast<int>(f.size());
    ++count[size];
    const Point foot = face_foot(p, f);
    height[size].add(foot.norm());
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int v = f[k];
      const int cls = report.class_of.at(static_cast<std::size_t>(v));
      const double a = angle_at(p.vertex(f[(k + f.size() - 1) % f.size()]), p.vertex(v), p.vertex(f[(k + 1) % f.size()]));
      alpha[size][static_cast<std::size_t>(cls)].add(a);
      rho[size][static_cast<std::size_t>(cls)].add((p.vertex(v) - foot).norm());
    }
  }
  const double scale = std::max(1.0, prm.r2);
  for (const auto& [size, spreads] : alpha) {
    for (const auto& s : spreads) {
      if (!s.empty() && s.hi - s.lo > tol.abs_eps()) {
        throw InconsistentAnglesError("faces of size " + std::to_string(size) + " have differing interior angles");
      }
    }
    if (height[size].hi - height[size].lo > tol.abs_eps() * scale) {
      throw InconsistentAnglesError("faces of size " + std::to_string(size) + " lie at differing heights");
    }
    FaceTypeAngles t;
    t.size = size;
    t.count = count[size];
    t.alpha1 = spreads[0].empty() ? 0.0 : spreads[0].mid();
    t.alpha2 = spreads[1].empty() ? 0.0 : spreads[1].mid();
    t.eps = (t.alpha1 - t.alpha2) / (2 * kPi);
    t.alpha_reg = (1.0 - 2.0 / size) * kPi;
    t.height = height[size].mid();
    t.rho1 = rho[size][0].empty() ? 0.0 : rho[size][0].mid();
    t.rho2 = rho[size][1].empty() ? 0.0 : rho[size][1].mid();
    if (p.dim() == 3) {
      t.beta1 = spherical_from_planar(t.alpha1, prm.ell, prm.r2, table.ell_spherical);
      t.beta2 = spherical_from_planar(t.alpha2, prm.ell, prm.r1, table.ell_spherical);
    }
    table.by_size[size] = t;
  }
  return table;
}

bool TypeSignature::alternating() const {
  const std::size_t n = cyclic.size();
  if (n < 4 || n % 2 != 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cyclic[i] == cyclic[(i + 1) % n] || cyclic[i] != cyclic[(i + 2) % n]) return false;
  }
  return true;
}

std::string TypeSignature::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + std::to_string(entries[i]);
  return s + ")";
}

std::map<std::string, int> VertexTypes::census() const {
  std::map<std::string, int> out;
  for (const auto& t : vertex) ++out[t.str()];
  return out;
}

VertexTypes vertex_types(const Polytope& p) {
  const auto faces = two_faces(p);
  const auto n = static_cast<std::size_t>(p.num_vertices());
  // per vertex: (face index, neighbour before, neighbour after)
  struct Incidence {
    int face, prev, next;
  };
  std::vector<std::vector<Incidence>> at(n);
  VertexTypes out;
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& f = faces[fi];
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int v = f[k], nx = f[(k + 1) % f.size()];
      at[static_cast<std::size_t>(v)].push_back({static_cast<int>(fi), f[(k + f.size() - 1) % f.size()], nx});
      out.edge[make_edge(v, nx)].push_back(static_cast<int>(f.size()));
    }
  }
  for (auto& [e, sizes] : out.edge) std::sort(sizes.begin(), sizes.end());

  out.vertex.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& t = out.vertex[v];
    const auto& inc = at[v];
    for (const auto& x : inc) t.entries.push_back(static_cast<int>(faces[static_cast<std::size_t>(x.face)].size()));
    std::sort(t.entries.begin(), t.entries.end());
    if (p.dim() != 3 || inc.empty()) continue;
    // walk around the vertex: the face after `x` is the one whose prev is x.next
    std::vector<char> used(inc.size(), 0);
    std::size_t cur = 0;
    for (std::size_t step = 0; step < inc.size(); ++step) {
      used[cur] = 1;
      t.cyclic.push_back(static_cast<int>(faces[static_cast<std::size_t>(inc[cur].face)].size()));
      std::size_t nxt = inc.size();
      for (std::size_t j = 0; j < inc.size(); ++j) {
        if (!used[j] && (inc[j].prev == inc[cur].next || inc[j].next == inc[cur].next ||
                         inc[j].prev == inc[cur].prev || inc[j].next == inc[cur].prev)) {
          nxt = j;
          break;
        }
      }
      if (nxt == inc.size()) break;
      cur = nxt;
    }
    if (t.cyclic.size() != inc.size()) t.cyclic.clear();
  }
  return out;
}

bool check_spherical_sums(const Polytope& p, const BipartiteReport& report, const AngleTable& table,
                          const Tolerance& tol) {
  if (!contains_origin_interior(p)) throw std::domain_error("check_spherical_sums: origin is not interior");
  if (p.dim() != 3) throw std::invalid_argument("check_spherical_sums: polytope must be 3-dimensional");
  const auto types = vertex_types(p);
  for (std::size_t v = 0; v < types.vertex.size(); ++v) {
    const int cls = report.class_of.at(v);
    double sum = 0.0;
    for (int size : types.vertex[v].entries) {
      const auto& t = table.by_size.at(size);
      sum += cls == 0 ? t.beta1 : t.beta2;
    }
    if (!tol.close(sum, 2 * kPi)) return false;
  }
  for (const auto& [size, t] : table.by_size) {
    const double k = size / 2.0;
    if (!tol.definitely_less(2 * (k - 1) * kPi, k * t.beta1 + k * t.beta2)) return false;
  }
  return true;
}

nlohmann::json to_json(const TypeSignature& t) {
  return {{"entries", t.entries}, {"cyclic", t.cyclic}, {"alternating", t.alternating()}};
}

nlohmann::json to_json(const AngleTable& t) {
  nlohmann::json types = nlohmann::json::object();
  for (const auto& [size, a] : t.by_size) {
    types[std::to_string(size)] = {{"faces", a.count},   {"alpha1", a.alpha1}, {"alpha2", a.alpha2},
                                   {"beta1", a.beta1},   {"beta2", a.beta2},   {"eps", a.eps},
                                   {"alpha_reg", a.alpha_reg}, {"height", a.height},
                                   {"rho1", a.rho1},     {"rho2", a.rho2}};
  }
  return {{"ell_spherical", t.ell_spherical}, {"face_types", types}};
}

nlohmann::json bipartite_json(const Polytope& p, const BipartiteVerdict& v) {
  nlohmann::json j;
  j["bipartite"] = v.report.has_value();
  if (!v.report) {
    j["strict"] = false;
    j["reason"] = to_string(*v.reason);
    j["detail"] = v.detail;
    return j;
  }
  const auto& r = *v.report;
  j["strict"] = r.strict;
  j["r1"] = r.params.r1;
  j["r2"] = r.params.r2;
  j["ell"] = r.params.ell;
  j["rho"] = r.params.rho;
  j["classes"] = {r.classes[0], r.classes[1]};
  try {
    j["angle_table"] = to_json(angle_table(p, r));
    j["vertex_types"] = vertex_types(p).census();
  } catch (const std::exception& e) {
    j["angle_table_error"] = e.what();
  }
  return j;
}

}  // namespace bipoly
