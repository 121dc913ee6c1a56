#include "bipoly/symmetry.hpp"

#include "bipoly/catalog.hpp"
#include "bipoly/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bipoly {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

long long discretize(double x, double tol) { return std::llround(x / tol); }

// Greedy basis: vertex indices whose coordinates are linearly independent.
std::vector<int> choose_basis(const Polytope& p) {
  std::vector<int> basis;
  Eigen::MatrixXd M(p.dim(), 0);
  for (int i = 0; i < p.num_vertices() && static_cast<int>(basis.size()) < p.dim(); ++i) {
    Eigen::MatrixXd trial(p.dim(), M.cols() + 1);
    trial << M, p.vertex(i);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(trial);
    lu.setThreshold(1e-9);
    if (lu.rank() == trial.cols()) {
      M = trial;
      basis.push_back(i);
    }
  }
  if (static_cast<int>(basis.size()) != p.dim()) throw std::invalid_argument("symmetry_group: vertices do not span");
  return basis;
}

std::vector<Permutation> closure(const std::vector<Permutation>& gens, std::size_t n, std::size_t cap) {
  Permutation id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::vector<Permutation> out{id};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = g[static_cast<std::size_t>(out[head][i])];
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw GroupTooLargeError("symmetry group exceeds the element cap");
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> collect(UnionFind& uf, std::size_t n) {
  std::map<std::size_t, std::vector<int>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

IsometryGroup symmetry_group(const Polytope& p, std::size_t cap, double color_tol) {
  const int n = p.num_vertices();
  const int d = p.dim();
  const double scale = std::max(1.0, p.circumradius());
  if (p.centroid().norm() > 1e-9 * scale) throw std::invalid_argument("symmetry_group: vertex centroid is not at the origin");

  Eigen::MatrixXd V(d, n);
  for (int i = 0; i < n; ++i) V.col(i) = p.vertex(i);
  const Eigen::MatrixXd gram = V.transpose() * V;
  const double gtol = color_tol * scale * scale;

  // colour = norm plus the sorted multiset of inner products with all vertices
  std::vector<std::vector<long long>> color(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& c = color[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) c.push_back(discretize(gram(i, j), gtol));
    std::sort(c.begin(), c.end());
    c.insert(c.begin(), discretize(gram(i, i), gtol));
  }

  const std::vector<int> basis = choose_basis(p);
  Eigen::MatrixXd B(d, d);
  for (int k = 0; k < d; ++k) B.col(k) = p.vertex(basis[static_cast<std::size_t>(k)]);
  const Eigen::MatrixXd B_inv = B.inverse();
  const VertexLocator locate(p.vertices(), 1e-6 * scale);

  std::vector<Eigen::MatrixXd> matrices;
  std::vector<Permutation> perms;
  std::vector<int> image(static_cast<std::size_t>(d));

  auto try_complete = [&] {
    Eigen::MatrixXd W(d, d);
    for (int k = 0; k < d; ++k) W.col(k) = p.vertex(image[static_cast<std::size_t>(k)]);
    const Eigen::MatrixXd M = W * B_inv;
    if ((M.transpose() * M - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-6) return;
    Permutation perm(static_cast<std::size_t>(n));
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      const auto j = locate.find(M * p.vertex(i));
      if (!j || hit[static_cast<std::size_t>(*j)]) return;
      hit[static_cast<std::size_t>(*j)] = 1;
      perm[static_cast<std::size_t>(i)] = *j;
    }
    if (perms.size() >= cap) throw GroupTooLargeError("symmetry group exceeds the element cap");
    matrices.push_back(M);
    perms.push_back(std::move(perm));
  };

  auto search = [&](auto&& self, int k) -> void {
    if (k == d) {
      try_complete();
      return;
    }
    const int bk = basis[static_cast<std::size_t>(k)];
    for (int w = 0; w < n; ++w) {
      if (color[static_cast<std::size_t>(w)] != color[static_cast<std::size_t>(bk)]) continue;
      bool ok = true;
      for (int l = 0; l < k && ok; ++l) {
        const int wl = image[static_cast<std::size_t>(l)];
        ok = w != wl && std::abs(gram(w, wl) - gram(bk, basis[static_cast<std::size_t>(l)])) <= gtol;
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(k)] = w;
      self(self, k + 1);
    }
  };
  search(search, 0);

  // greedy generating set
  IsometryGroup g;
  g.order = perms.size();
  std::set<Permutation> generated;
  Permutation id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  generated.insert(id);
  for (std::size_t e = 0; e < perms.size() && generated.size() < perms.size(); ++e) {
    if (generated.count(perms[e])) continue;
    g.generators.push_back(matrices[e]);
    g.generator_perms.push_back(perms[e]);
    const auto all = closure(g.generator_perms, static_cast<std::size_t>(n), cap);
    generated = std::set<Permutation>(all.begin(), all.end());
  }
  return g;
}

std::vector<std::vector<int>> orbits(const Polytope& p, const IsometryGroup& g, OrbitKind kind) {
  const auto nv = static_cast<std::size_t>(p.num_vertices());
  if (kind == OrbitKind::kVertices) {
    UnionFind uf(nv);
    for (const auto& perm : g.generator_perms) {
      for (std::size_t i = 0; i < nv; ++i) uf.unite(i, static_cast<std::size_t>(perm[i]));
    }
    return collect(uf, nv);
  }
  std::map<Edge, std::size_t> edge_index;
  for (std::size_t e = 0; e < p.edges().size(); ++e) edge_index[p.edges()[e]] = e;
  const std::size_t ne = p.edges().size();
  const std::size_t count = kind == OrbitKind::kEdges ? ne : 2 * ne;
  UnionFind uf(count);
  for (const auto& perm : g.generator_perms) {
    for (std::size_t e = 0; e < ne; ++e) {
      const Edge& ed = p.edges()[e];
      const int a = perm[static_cast<std::size_t>(ed[0])], b = perm[static_cast<std::size_t>(ed[1])];
      const auto it = edge_index.find(make_edge(a, b));
      if (it == edge_index.end()) throw std::invalid_argument("orbits: group does not preserve the edge set");
      if (kind == OrbitKind::kEdges) {
        uf.unite(e, it->second);
      } else {
        // arc leaving ed[0] maps to the arc leaving a
        const std::size_t tail_a = a < b ? 0 : 1;
        uf.unite(2 * e, 2 * it->second + tail_a);
        uf.unite(2 * e + 1, 2 * it->second + (1 - tail_a));
      }
    }
  }
  return collect(uf, count);
}

namespace {

Polytope centred(const Polytope& p, std::string* note) {
  const Point c = p.centroid();
  const double scale = std::max(1.0, p.circumradius());
  if (c.norm() <= 1e-9 * scale) return p;
  std::ostringstream os;
  os << "translated by -centroid (|centroid| = " << c.norm() << ")";
  if (note) *note = os.str();
  return p.translated(-c, os.str());
}

std::size_t orbit_count(const Polytope& p, OrbitKind kind) {
  const Polytope q = centred(p, nullptr);
  return orbits(q, symmetry_group(q), kind).size();
}

double radius_ratio(const Polytope& p) {
  double lo = 1e300, hi = 0;
  for (const auto& v : p.vertices()) {
    lo = std::min(lo, v.norm());
    hi = std::max(hi, v.norm());
  }
  return hi / lo;
}

}  // namespace

bool is_vertex_transitive(const Polytope& p) { return orbit_count(p, OrbitKind::kVertices) == 1; }
bool is_edge_transitive(const Polytope& p) { return orbit_count(p, OrbitKind::kEdges) == 1; }
bool is_arc_transitive(const Polytope& p) { return orbit_count(p, OrbitKind::kArcs) == 1; }

TransitivityReport classify_transitivity(const Polytope& input) {
  TransitivityReport r;
  std::string note;
  const Polytope p = centred(input, &note);
  r.provenance = p.provenance();
  const IsometryGroup g = symmetry_group(p);
  r.group_order = g.order;
  r.vertex_orbits = orbits(p, g, OrbitKind::kVertices).size();
  r.edge_orbits = orbits(p, g, OrbitKind::kEdges).size();
  r.arc_orbits = orbits(p, g, OrbitKind::kArcs).size();
  r.vertex_transitive = r.vertex_orbits == 1;
  r.edge_transitive = r.edge_orbits == 1;
  r.arc_transitive = r.arc_orbits == 1;

  if (r.vertex_transitive && r.edge_transitive) {
    r.classification = "vertex- and edge-transitive";
  } else if (r.vertex_transitive) {
    r.classification = "vertex-not-edge";
  } else if (!r.edge_transitive) {
    r.classification = "neither";
  } else {
    std::string match = "unrecognized";
    if (p.dim() == 2) {
      match = "non-regular 2k-gon (2k=" + std::to_string(p.num_vertices()) + ")";
    } else if (p.dim() == 3) {
      const auto nf = two_faces(p).size();
      const double ratio = radius_ratio(p);
      auto fits = [&](const Polytope& ref) {
        return p.num_vertices() == ref.num_vertices() && p.num_edges() == ref.num_edges() &&
               nf == static_cast<std::size_t>(ref.num_faces()) && std::abs(ratio - radius_ratio(ref)) < 1e-6;
      };
      if (fits(rhombic_dodecahedron())) match = "rhombic dodecahedron";
      else if (fits(rhombic_triacontahedron())) match = "rhombic triacontahedron";
    }
    r.classification = "edge-not-vertex: " + match;
  }
  return r;
}

nlohmann::json to_json(const TransitivityReport& r) {
  return {{"group_order", r.group_order},
          {"vertex_orbits", r.vertex_orbits},
          {"edge_orbits", r.edge_orbits},
          {"arc_orbits", r.arc_orbits},
          {"vertex_transitive", r.vertex_transitive},
          {"edge_transitive", r.edge_transitive},
          {"arc_transitive", r.arc_transitive},
          {"classification", r.classification},
          {"provenance", r.provenance}};
}

}  // namespace bipoly
