#include "bipoly/catalog.hpp"

#include "bipoly/golden.hpp"
#include "bipoly/hull3d.hpp"
#include "bipoly/near_miss.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bipoly {
namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Polytope from_hull(std::vector<Point> vertices, const std::string& provenance) {
  const auto faces = faces_3d(Polytope(3, vertices, {}));
  return Polytope(3, std::move(vertices), edges_from_faces(faces), faces, provenance);
}

int find_or_add(std::vector<Point>& pts, const Point& x, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if ((pts[i] - x).norm() <= tol) return static_cast<int>(i);
  }
  pts.push_back(x);
  return static_cast<int>(pts.size() - 1);
}

}  // namespace

Polytope bipartite_polygon(double r1, double r2, int k) {
  if (k < 2) throw std::invalid_argument("bipartite_polygon: k must be >= 2");
  if (!(r1 > 0.0) || r1 > r2) throw std::invalid_argument("bipartite_polygon: need 0 < r1 <= r2");
  const double step = std::numbers::pi / k;
  if (!(r1 > r2 * std::cos(step))) throw std::invalid_argument("bipartite_polygon: polygon is not strictly convex");
  std::vector<Point> vs;
  std::vector<Edge> es;
  FaceCycle face;
  for (int i = 0; i < 2 * k; ++i) {
    const double r = i % 2 == 0 ? r1 : r2;
    vs.emplace_back(Eigen::Vector2d(r * std::cos(i * step), r * std::sin(i * step)));
    es.push_back(make_edge(i, (i + 1) % (2 * k)));
    face.push_back(i);
  }
  return Polytope(2, std::move(vs), std::move(es), {face},
                  "bipartite-polygon(r1=" + fmt(r1) + ",r2=" + fmt(r2) + ",k=" + std::to_string(k) + ")");
}

Polytope regular_polygon(int k, double edge) {
  if (k < 2) throw std::invalid_argument("regular_polygon: k must be >= 2");
  const double R = edge / (2.0 * std::sin(std::numbers::pi / (2 * k)));
  return bipartite_polygon(R, R, k).with_provenance("regular-polygon(2k=" + std::to_string(2 * k) + ")");
}

Polytope cube(int d, double half_edge) {
  if (d < 1) throw std::invalid_argument("cube: dimension must be >= 1");
  if (d > 20) throw std::invalid_argument("cube: dimension too large");
  if (!(half_edge > 0.0)) throw std::invalid_argument("cube: half_edge must be positive");
  const int n = 1 << d;
  std::vector<Point> vs;
  for (int m = 0; m < n; ++m) {
    Point v(d);
    for (int a = 0; a < d; ++a) v(a) = (m >> a) & 1 ? half_edge : -half_edge;
    vs.push_back(v);
  }
  std::vector<Edge> es;
  std::vector<FaceCycle> fs;
  for (int m = 0; m < n; ++m) {
    for (int a = 0; a < d; ++a) {
      if (!((m >> a) & 1)) es.push_back({m, m | (1 << a)});
      for (int b = a + 1; b < d; ++b) {
        if (!((m >> a) & 1) && !((m >> b) & 1)) {
          fs.push_back({m, m | (1 << a), m | (1 << a) | (1 << b), m | (1 << b)});
        }
      }
    }
  }
  return Polytope(d, std::move(vs), std::move(es), std::move(fs),
                  "cube(d=" + std::to_string(d) + ",half_edge=" + fmt(half_edge) + ")");
}

Polytope point() { return Polytope(0, {Point(0)}, {}, {}, "point"); }

Polytope cartesian_product(const Polytope& p, const Polytope& q) {
  const int nq = q.num_vertices();
  auto idx = [nq](int i, int j) { return i * nq + j; };
  std::vector<Point> vs;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      Point v(p.dim() + q.dim());
      v << a, b;
      vs.push_back(v);
    }
  }
  std::vector<Edge> es;
  std::vector<FaceCycle> fs;
  for (const auto& e : p.edges()) {
    for (int j = 0; j < nq; ++j) es.push_back({idx(e[0], j), idx(e[1], j)});
  }
  for (int i = 0; i < p.num_vertices(); ++i) {
    for (const auto& e : q.edges()) es.push_back({idx(i, e[0]), idx(i, e[1])});
  }
  for (const auto& e : p.edges()) {
    for (const auto& f : q.edges()) {
      fs.push_back({idx(e[0], f[0]), idx(e[1], f[0]), idx(e[1], f[1]), idx(e[0], f[1])});
    }
  }
  for (const auto& face : p.faces()) {
    for (int j = 0; j < nq; ++j) {
      FaceCycle c;
      for (int i : face) c.push_back(idx(i, j));
      fs.push_back(c);
    }
  }
  for (int i = 0; i < p.num_vertices(); ++i) {
    for (const auto& face : q.faces()) {
      FaceCycle c;
      for (int j : face) c.push_back(idx(i, j));
      fs.push_back(c);
    }
  }
  std::string prov;
  if (q.num_vertices() == 1 && q.dim() == 0) prov = p.provenance();
  else if (p.num_vertices() == 1 && p.dim() == 0) prov = q.provenance();
  else prov = "(" + p.provenance() + ") x (" + q.provenance() + ")";
  return Polytope(p.dim() + q.dim(), std::move(vs), std::move(es), std::move(fs), prov);
}

Polytope hyperprism(int k, int folds) {
  if (k < 2) throw std::invalid_argument("hyperprism: k must be >= 2");
  if (folds < 1) throw std::invalid_argument("hyperprism: folds must be >= 1");
  const Polytope gon = regular_polygon(k);
  Polytope out = gon;
  for (int f = 1; f < folds; ++f) out = cartesian_product(out, gon);
  return out.with_provenance("hyperprism(k=" + std::to_string(k) + ",folds=" + std::to_string(folds) + ")");
}

Polytope permutahedron(const GroupDescriptor& g, std::optional<Point> seed) {
  const Point v = seed ? *seed : default_seed(g);
  if (v.size() != g.rank) throw std::invalid_argument("permutahedron: seed dimension does not match the group rank");
  const auto elements = group_elements(g);

  std::vector<Point> orbit;
  std::vector<int> vertex_of;  // element index -> vertex index
  const double tol = 1e-7 * std::max(1.0, v.norm());
  for (const auto& T : elements) vertex_of.push_back(find_or_add(orbit, T * v, tol));
  if (orbit.size() != elements.size()) {
    throw std::domain_error("permutahedron: seed is fixed by a non-identity element (orbit " +
                            std::to_string(orbit.size()) + " < group order " + std::to_string(elements.size()) + ")");
  }
  if (g.rank < 2) throw std::invalid_argument("permutahedron: rank must be >= 2");

  VertexLocator locate(orbit, tol);
  auto index_of = [&](const Point& x) {
    const auto i = locate.find(x);
    if (!i) throw std::logic_error("permutahedron: orbit not closed");
    return *i;
  };
  std::vector<Eigen::MatrixXd> refl;
  for (const auto& r : g.roots) refl.push_back(reflection(r));

  std::set<Edge> edges;
  std::set<std::vector<int>> face_keys;
  std::vector<FaceCycle> faces;
  for (std::size_t t = 0; t < elements.size(); ++t) {
    const Eigen::MatrixXd& T = elements[t];
    for (int i = 0; i < g.rank; ++i) {
      edges.insert(make_edge(vertex_of[t], index_of(T * refl[static_cast<std::size_t>(i)] * v)));
      for (int j = i + 1; j < g.rank; ++j) {
        // walk T, T s_i, T s_i s_j, ... around the coset of <s_i, s_j>
        FaceCycle cycle;
        Eigen::MatrixXd W = T;
        for (int step = 0; step < 2 * g.coxeter(i, j); ++step) {
          cycle.push_back(index_of(W * v));
          W = W * refl[static_cast<std::size_t>(step % 2 == 0 ? i : j)];
        }
        std::vector<int> key = cycle;
        std::sort(key.begin(), key.end());
        if (face_keys.insert(key).second) faces.push_back(cycle);
      }
    }
  }
  double min_edge = std::numeric_limits<double>::infinity();
  for (const auto& e : edges) min_edge = std::min(min_edge, (orbit[static_cast<std::size_t>(e[0])] - orbit[static_cast<std::size_t>(e[1])]).norm());
  for (auto& x : orbit) x /= min_edge;
  return Polytope(g.rank, std::move(orbit), {edges.begin(), edges.end()}, std::move(faces),
                  "permutahedron(" + g.name + ")");
}

Polytope rhombic_hexahedron(double stretch) {
  if (!(stretch > 0.0)) throw std::invalid_argument("rhombic_hexahedron: stretch must be positive");
  const Eigen::Vector3d u = Eigen::Vector3d::Ones().normalized();
  const Eigen::Matrix3d M = Eigen::Matrix3d::Identity() + (stretch - 1.0) * u * u.transpose();
  return cube(3, 1.0).transformed(M, "").with_provenance("rhombic-hexahedron(stretch=" + fmt(stretch) + ")");
}

Polytope rhombic_dodecahedron() {
  std::vector<Point> vs;
  for (int m = 0; m < 8; ++m) {
    vs.emplace_back(Eigen::Vector3d(m & 1 ? 1 : -1, m & 2 ? 1 : -1, m & 4 ? 1 : -1));
  }
  for (int a = 0; a < 3; ++a) {
    for (double s : {2.0, -2.0}) {
      Eigen::Vector3d v = Eigen::Vector3d::Zero();
      v(a) = s;
      vs.emplace_back(v);
    }
  }
  return from_hull(std::move(vs), "rhombic-dodecahedron");
}

std::vector<Eigen::Vector3d> icosahedral_axes() {
  const double p = kPhi;
  std::vector<Eigen::Vector3d> axes{{0, p, 1}, {0, -p, 1}, {1, 0, p}, {1, 0, -p}, {p, 1, 0}, {-p, 1, 0}};
  for (auto& a : axes) a.normalize();
  return axes;
}

Polytope zonohedron(const std::vector<Eigen::Vector3d>& generators, const std::string& provenance) {
  const std::size_t n = generators.size();
  if (n < 3) throw std::invalid_argument("zonohedron: need at least 3 generators");
  std::vector<Point> vs;
  std::vector<FaceCycle> faces;
  double scale = 0.0;
  for (const auto& g : generators) scale += g.norm();
  const double tol = 1e-9 * scale;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Eigen::Vector3d gi = generators[i], gj = generators[j];
      const Eigen::Vector3d normal = gi.cross(gj);
      for (double sign : {1.0, -1.0}) {
        const Eigen::Vector3d nrm = sign * normal;
        Eigen::Vector3d c = Eigen::Vector3d::Zero();
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          const double s = nrm.dot(generators[k]);
          if (std::abs(s) <= tol * normal.norm()) {
            throw std::invalid_argument("zonohedron: three coplanar generators");
          }
          c += (s > 0 ? 0.5 : -0.5) * generators[k];
        }
        std::array<Eigen::Vector3d, 4> quad{c + 0.5 * (gi + gj), c + 0.5 * (gj - gi), c - 0.5 * (gi + gj),
                                            c + 0.5 * (gi - gj)};
        if ((quad[1] - quad[0]).cross(quad[2] - quad[1]).dot(nrm) < 0) std::swap(quad[1], quad[3]);
        FaceCycle f;
        for (const auto& q : quad) f.push_back(find_or_add(vs, q, tol));
        faces.push_back(f);
      }
    }
  }
  auto edges = edges_from_faces(faces);
  return Polytope(3, std::move(vs), std::move(edges), std::move(faces), provenance);
}

Polytope rhombic_triacontahedron() { return zonohedron(icosahedral_axes(), "rhombic-triacontahedron"); }

Polytope bilinski_dodecahedron() {
  const auto axes = icosahedral_axes();
  return zonohedron({axes.begin(), axes.begin() + 4}, "bilinski-dodecahedron");
}

Polytope rhombic_icosahedron() {
  const auto axes = icosahedral_axes();
  return zonohedron({axes.begin(), axes.begin() + 5}, "rhombic-icosahedron");
}

Polytope icosahedron_from_cube() {
  std::vector<Point> vs;
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      const double a = s1 * kPhi, b = s2;
      vs.emplace_back(Eigen::Vector3d(0, a, b));
      vs.emplace_back(Eigen::Vector3d(b, 0, a));
      vs.emplace_back(Eigen::Vector3d(a, b, 0));
    }
  }
  return from_hull(std::move(vs), "icosahedron");
}

// ---------------------------------------------------------------------------
// registry

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries{
      {"bipartite-polygon", "2k-gon with alternating radii", {"r1", "r2", "k"}},
      {"cube", "d-cube", {"d", "half-edge"}},
      {"hyperprism", "product of regular 2k-gons", {"k", "folds"}},
      {"permutahedron", "orbit polytope of a reflection group", {"group", "seed"}},
      {"rhombic-hexahedron", "cube stretched along a diagonal", {"stretch"}},
      {"rhombic-dodecahedron", "rhombic dodecahedron", {}},
      {"rhombic-triacontahedron", "rhombic triacontahedron", {}},
      {"bilinski-dodecahedron", "Bilinski dodecahedron", {}},
      {"rhombic-icosahedron", "rhombic icosahedron", {}},
      {"icosahedron", "icosahedron with edge 2phi", {}},
      {"near-miss", "the near-miss polyhedron Q", {"variant"}},
  };
  return entries;
}

namespace {

double num(const CatalogParams& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  if (it == p.end()) return fallback;
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) {
    throw std::invalid_argument("parameter --" + key + ": not a number: '" + it->second + "'");
  }
  return x;
}

int integer(const CatalogParams& p, const std::string& key, int fallback) {
  const double x = num(p, key, fallback);
  if (x != std::floor(x)) throw std::invalid_argument("parameter --" + key + " must be an integer");
  return static_cast<int>(x);
}

Point parse_seed(const std::string& text) {
  std::vector<double> xs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      xs.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter --seed: expected comma-separated numbers");
    }
  }
  return Eigen::Map<Eigen::VectorXd>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

}  // namespace

Polytope build_catalog(const std::string& name, const CatalogParams& params) {
  const auto& entries = catalog_entries();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) throw std::invalid_argument("unknown polytope '" + name + "'");
  for (const auto& [key, value] : params) {
    if (std::find(it->params.begin(), it->params.end(), key) == it->params.end()) {
      throw std::invalid_argument("'" + name + "' does not take parameter --" + key);
    }
  }
  if (name == "bipartite-polygon") {
    return bipartite_polygon(num(params, "r1", 1.0), num(params, "r2", 1.0), integer(params, "k", 3));
  }
  if (name == "cube") return cube(integer(params, "d", 3), num(params, "half-edge", 1.0));
  if (name == "hyperprism") return hyperprism(integer(params, "k", 3), integer(params, "folds", 2));
  if (name == "permutahedron") {
    const auto g = params.count("group") ? params.at("group") : std::string("A3");
    std::optional<Point> seed;
    if (params.count("seed")) seed = parse_seed(params.at("seed"));
    return permutahedron(parse_group(g), seed);
  }
  if (name == "rhombic-hexahedron") return rhombic_hexahedron(num(params, "stretch", 2.0));
  if (name == "rhombic-dodecahedron") return rhombic_dodecahedron();
  if (name == "rhombic-triacontahedron") return rhombic_triacontahedron();
  if (name == "bilinski-dodecahedron") return bilinski_dodecahedron();
  if (name == "rhombic-icosahedron") return rhombic_icosahedron();
  if (name == "icosahedron") return icosahedron_from_cube();
  const auto v = params.count("variant") ? params.at("variant") : std::string("equilateral");
  return construct_Q(parse_variant(v));
}

}  // namespace bipoly
