#include "bipoly/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bipoly/appendix.hpp"
#include "bipoly/bipartite.hpp"
#include "bipoly/case_analysis.hpp"
#include "bipoly/catalog.hpp"
#include "bipoly/golden.hpp"
#include "bipoly/near_miss.hpp"
#include "bipoly/predicates.hpp"
#include "bipoly/reflection_group.hpp"
#include "bipoly/symmetry.hpp"

namespace bipoly {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

std::string num(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ") {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : sep) + x;
  return s;
}

// Runs f and turns an escaping exception into a failed check.
template <class F>
Check guarded(const std::string& name, F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

const Polytope& find_instance(const std::vector<NamedPolytope>& xs, const std::string& label) {
  for (const auto& x : xs) {
    if (x.label == label) return x.polytope;
  }
  throw std::logic_error("no reference instance named " + label);
}

Check dihedral_check(const std::string& name, const Polytope& p, double expected) {
  return guarded(name, [&] {
    double worst = 0;
    for (const auto& e : p.edges()) worst = std::max(worst, std::abs(dihedral_angle(p, e) - expected));
    return Check{name, worst <= 1e-9, std::to_string(p.num_edges()) + " edges, max deviation " + num(worst, 3) + " rad"};
  });
}

Check criterion_1_a() {
  return dihedral_check("rhombic dodecahedron dihedrals = 120 deg", rhombic_dodecahedron(), 120 * kDeg);
}
Check criterion_1_b() {
  return dihedral_check("rhombic triacontahedron dihedrals = 144 deg", rhombic_triacontahedron(), 144 * kDeg);
}

CriterionResult criterion_2() {
  CriterionResult r{2, "dihedral sum obstruction", {}};
  r.checks.push_back(guarded("every triple from {120,144} sums to >= 360 deg", [] {
    std::vector<std::string> sums;
    bool all = true;
    for (int a : {120, 144}) {
      for (int b : {120, 144}) {
        for (int c : {120, 144}) {
          all = all && a + b + c >= 360;
          if (a <= b && b <= c) sums.push_back(std::to_string(a + b + c));
        }
      }
    }
    return Check{"every triple from {120,144} sums to >= 360 deg", all, "sums " + join(sums)};
  }));
  r.checks.push_back({"dihedral_sum_obstruction()", dihedral_sum_obstruction(), ""});
  return r;
}

CriterionResult criterion_3(const std::vector<NamedPolytope>& instances) {
  CriterionResult r{3, "edge- but not vertex-transitive catalog members", {}};
  std::set<std::string> expected{"rhombic-dodecahedron", "rhombic-triacontahedron"};
  for (int k = 2; k <= 6; ++k) expected.insert("bipartite-polygon(k=" + std::to_string(k) + ")");
  r.checks.push_back(guarded("edge-not-vertex set", [&] {
    std::set<std::string> found;
    std::vector<std::string> bad_labels;
    for (const auto& x : instances) {
      const TransitivityReport t = classify_transitivity(x.polytope);
      if (t.classification.rfind("edge-not-vertex", 0) == 0) {
        found.insert(x.label);
        if (t.classification.find("unrecognized") != std::string::npos) bad_labels.push_back(x.label);
      }
    }
    std::vector<std::string> extra, missing;
    std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(missing));
    std::string detail = std::to_string(found.size()) + " of " + std::to_string(instances.size()) + " instances";
    if (!extra.empty()) detail += "; unexpected: " + join(extra);
    if (!missing.empty()) detail += "; missing: " + join(missing);
    if (!bad_labels.empty()) detail += "; unrecognized: " + join(bad_labels);
    return Check{"edge-not-vertex set", extra.empty() && missing.empty() && bad_labels.empty(), detail};
  }));
  for (const char* name : {"rhombic-dodecahedron", "rhombic-triacontahedron"}) {
    const std::string title = std::string(name) + " strictly bipartite";
    r.checks.push_back(guarded(title, [&] {
      const auto v = analyze_bipartite(find_instance(instances, name));
      if (!v) return Check{title, false, v.detail};
      const auto& pr = v.report->params;
      return Check{title, v.report->strict, "r1=" + num(pr.r1) + " r2=" + num(pr.r2)};
    }));
  }
  return r;
}

CriterionResult criterion_4() {
  CriterionResult r{4, "permutahedra are bipartite with r1 = r2", {}};
  for (const char* g : {"A3", "B3", "H3", "I1+I2(3)", "I1+I2(4)", "I1+I2(5)"}) {
    const std::string title = std::string(g) + "-permutahedron";
    r.checks.push_back(guarded(title, [&] {
      const Polytope p = permutahedron(parse_group(g));
      const auto v = analyze_bipartite(p);
      if (!v) return Check{title, false, v.detail};
      const double dr = std::abs(v.report->params.r1 - v.report->params.r2);
      const bool vt = is_vertex_transitive(p);
      const bool cs = centrally_symmetric_2faces(p);
      return Check{title, dr <= 1e-9 && vt && cs,
                   std::to_string(p.num_vertices()) + " vertices, |r1-r2|=" + num(dr, 3) +
                       (vt ? ", vertex-transitive" : ", NOT vertex-transitive") +
                       (cs ? ", 2-faces centrally symmetric" : ", asymmetric 2-face")};
    }));
  }
  return r;
}

CriterionResult criterion_5() {
  CriterionResult r{5, "1-types with K > 1 (face sizes up to 10)", {}};
  struct Row {
    FaceSizes tau;
    Rational K;
  };
  const std::vector<Row> expected{
      {{4, 4, 4}, Rational(3, 2)},  {{4, 4, 6}, Rational(4, 3)},   {{4, 4, 8}, Rational(5, 4)},
      {{4, 4, 10}, Rational(6, 5)}, {{4, 6, 6}, Rational(7, 6)},   {{4, 6, 8}, Rational(13, 12)},
      {{4, 6, 10}, Rational(31, 30)},
  };
  r.checks.push_back(guarded("enumerate_1_types(10)", [&] {
    const auto got = enumerate_1_types(10);
    std::vector<std::string> diffs;
    if (got.size() != expected.size()) diffs.push_back("row count " + std::to_string(got.size()));
    for (std::size_t i = 0; i < std::min(got.size(), expected.size()); ++i) {
      if (got[i].tau != expected[i].tau || got[i].K != expected[i].K) {
        diffs.push_back(format_type(got[i].tau) + " K=" + to_string(got[i].K));
      }
    }
    std::vector<std::string> ks;
    for (const auto& g : got) ks.push_back(to_string(g.K));
    return Check{"enumerate_1_types(10)", diffs.empty(), diffs.empty() ? "K = " + join(ks) : join(diffs, "; ")};
  }));
  return r;
}

CriterionResult criterion_6() {
  CriterionResult r{6, "infeasibility tables", {}};
  const TableSet t = reproduce_tables(50);
  const auto diffs = compare_with_expected(t);
  r.checks.push_back({"tables 4610/468/466 and parametric 442k match", diffs.empty(),
                      diffs.empty() ? std::to_string(t.tables.size()) + " tables, " +
                                          std::to_string(t.parametric.size()) + " parametric rows"
                                    : join(diffs, "; ")});
  const std::vector<Rational> lhs{Rational(4, 30), Rational(8, 30), Rational(14, 30), Rational(2, 12), Rational(5, 12),
                                  Rational(7, 12), Rational(9, 12), Rational(2, 6),   Rational(3, 6),  Rational(4, 6)};
  std::vector<Rational> got;
  for (const auto& table : t.tables) {
    for (const auto& row : table.rows) got.push_back(row.lhs);
  }
  std::vector<std::string> shown;
  for (const auto& g : got) shown.push_back(to_string(g));
  r.checks.push_back({"lhs values", got == lhs, join(shown)});
  std::vector<int> forced;
  for (const auto& p : t.parametric) {
    if (p.pattern == "(4,2k,4,2k)") forced = p.feasible_k;
  }
  r.checks.push_back({"(4,2k,4,2k) forces 2k = 6", forced == std::vector<int>{3},
                      forced.size() == 1 ? "unrefuted only at k=" + std::to_string(forced[0]) : "unexpected set"});
  return r;
}

CriterionResult criterion_7() {
  CriterionResult r{7, "determination of r", {}};
  r.checks.push_back(guarded("determine_r", [] {
    const RDetermination d = determine_r(12);
    bool rejections = true;
    for (const auto& line : d.trace) {
      const bool is5 = line.rfind("r=5:", 0) == 0;
      const bool rejected = line.find("rejected") != std::string::npos;
      rejections = rejections && (is5 != rejected);
    }
    return Check{"determine_r", d.r == 5 && rejections && d.trace.size() == 10,
                 "r=" + std::to_string(d.r) + ", " + std::to_string(d.trace.size() - 1) + " values rejected"};
  }));
  return r;
}

CriterionResult criterion_8() {
  CriterionResult r{8, "hexagon parity", {}};
  const HexagonParity h = hexagon_parity_argument();
  r.checks.push_back({"exhaustive 2^6 labelings", h.verified,
                      std::to_string(h.labelings_a) + " satisfy the 1-vertex rule, " + std::to_string(h.labelings_b) +
                          " the 2-vertex rule, " + std::to_string(h.labelings_both) + " both"});
  return r;
}

CriterionResult criterion_9() {
  CriterionResult r{9, "near-miss identity", {}};
  const GoldenNumber y(-3, 4), z(-1, 3);
  const GoldenNumber lhs = y * y + z * z;
  const GoldenNumber closed(35, -55);
  const GoldenNumber pow10 = GoldenNumber::one() + golden_pow(GoldenNumber::phi(), 10);
  r.checks.push_back({"(4phi-3)^2+(3phi-1)^2 = 35-55phi = 1+phi^10", lhs == closed && closed == pow10,
                      lhs.str() + " | " + closed.str() + " | " + pow10.str()});
  const double ratio = std::sqrt(pow10.to_double());
  r.checks.push_back({"|OA|/|OC| = 1.00405707", std::abs(ratio - 1.00405707) <= 1e-6, num(ratio, 12)});
  const double gap = (ratio - 1) * 100;
  r.checks.push_back({"gap = 0.4057%", std::abs(gap - 0.4057) <= 0.001, num(gap, 6) + "%"});
  return r;
}

CriterionResult criterion_10() {
  CriterionResult r{10, "construction of Q", {}};
  r.checks.push_back(guarded("counts and Euler characteristic", [] {
    const Polytope q = construct_Q(NearMissVariant::kEquilateral);
    const int chi = q.num_vertices() - q.num_edges() + q.num_faces();
    const bool ok = q.num_vertices() == 102 && q.num_edges() == 180 && q.num_faces() == 80 && chi == 2;
    return Check{"counts and Euler characteristic", ok,
                 "V=" + std::to_string(q.num_vertices()) + " E=" + std::to_string(q.num_edges()) +
                     " F=" + std::to_string(q.num_faces()) + " chi=" + std::to_string(chi)};
  }));
  r.checks.push_back(guarded("vertex type census", [] {
    const Polytope q = construct_Q(NearMissVariant::kEquilateral);
    const auto census = vertex_types(q).census();
    const std::map<std::string, int> expected{{"(4,4,6)", 60}, {"(4,4,6,6)", 30}, {"(4,4,4,4,4)", 12}};
    std::vector<std::string> shown;
    for (const auto& [k, n] : census) shown.push_back(k + " x" + std::to_string(n));
    return Check{"vertex type census", census == expected && verify_local_types(q), join(shown)};
  }));
  r.checks.push_back(guarded("equilateral variant", [] {
    const NearMissReport e = near_miss_report(NearMissVariant::kEquilateral);
    const bool ok = e.edge_spread < 1e-10 && std::abs(e.measured_ratio - 1.00405707) <= 1e-6 && !e.bipartite;
    return Check{"equilateral variant", ok,
                 "edge spread " + num(e.edge_spread, 3) + ", V2 radius ratio " + num(e.measured_ratio, 10)};
  }));
  r.checks.push_back(guarded("tangent variant", [] {
    const NearMissReport t = near_miss_report(NearMissVariant::kTangent);
    const bool ok = t.tangent && t.edge_spread > 1e-4 && !t.bipartite;
    return Check{"tangent variant", ok,
                 std::string(t.tangent ? "edge-tangent sphere exists" : "no edge-tangent sphere") + ", edge spread " +
                     num(t.edge_spread, 6)};
  }));
  return r;
}

CriterionResult criterion_11() {
  CriterionResult r{11, "edge-transitive zonotopes", {}};
  std::vector<std::pair<std::string, Polytope>> yes;
  for (int k = 2; k <= 6; ++k) yes.emplace_back("regular " + std::to_string(2 * k) + "-gon", regular_polygon(k));
  yes.emplace_back("3-cube", cube(3));
  yes.emplace_back("4-cube", cube(4));
  yes.emplace_back("(6,6)-duoprism", hyperprism(3, 2));
  yes.emplace_back("(8,8)-duoprism", hyperprism(4, 2));
  for (const auto& [name, p] : yes) {
    r.checks.push_back(guarded(name + " edge-transitive", [&, name = name] {
      const auto g = symmetry_group(p);
      const auto n = orbits(p, g, OrbitKind::kEdges).size();
      return Check{name + " edge-transitive", n == 1, "group order " + std::to_string(g.order)};
    }));
  }
  const std::vector<std::pair<std::string, Polytope>> no{
      {"A3-permutahedron", permutahedron(parse_group("A3"))},
      {"hexagonal prism", cartesian_product(regular_polygon(3), cube(1))}};
  for (const auto& [name, p] : no) {
    r.checks.push_back(guarded(name + " has 2 edge orbits", [&, name = name] {
      const auto g = symmetry_group(p);
      const auto n = orbits(p, g, OrbitKind::kEdges).size();
      return Check{name + " has 2 edge orbits", n == 2, std::to_string(n) + " edge orbits"};
    }));
  }
  return r;
}

CriterionResult criterion_12(const std::vector<NamedPolytope>& instances) {
  CriterionResult r{12, "oracle equivalence", {}};
  r.checks.push_back(guarded("derive_edges equals constructor edges", [&] {
    std::vector<std::string> bad;
    int tested = 0;
    for (const auto& x : instances) {
      if (x.polytope.num_vertices() > 120) continue;
      ++tested;
      if (derive_edges(x.polytope) != x.polytope.edges()) bad.push_back(x.label);
    }
    return Check{"derive_edges equals constructor edges", bad.empty(),
                 std::to_string(tested) + " polytopes" + (bad.empty() ? "" : "; mismatch: " + join(bad))};
  }));
  r.checks.push_back(guarded("symmetry order matches brute force", [&] {
    std::vector<std::string> shown, bad;
    for (const auto& x : instances) {
      const auto oracle = brute_force_symmetry_order(x.polytope);
      if (!oracle) continue;
      const auto order = symmetry_group(x.polytope).order;
      if (order != *oracle) bad.push_back(x.label + " " + std::to_string(order) + "!=" + std::to_string(*oracle));
      shown.push_back(x.label + ":" + std::to_string(order));
    }
    const Polytope c3 = cube(3), hex = regular_polygon(3);
    const bool pinned = brute_force_symmetry_order(c3) == std::size_t{48} && brute_force_symmetry_order(hex) == std::size_t{12};
    return Check{"symmetry order matches brute force", bad.empty() && pinned,
                 bad.empty() ? join(shown) : join(bad)};
  }));
  return r;
}

std::vector<Point> random_obtuse_frame(std::mt19937& rng, int d) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> scale(0.2, 5.0);
  // regular simplex directions, perturbed, rotated and rescaled
  Eigen::MatrixXd simplex = Eigen::MatrixXd::Identity(d + 1, d + 1);
  simplex.rowwise() -= Eigen::RowVectorXd::Constant(d + 1, 1.0 / (d + 1));
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(Eigen::VectorXd::Constant(d + 1, 1.0));
  const Eigen::MatrixXd basis = Eigen::MatrixXd(qr.householderQ()).rightCols(d);
  Eigen::MatrixXd g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = gauss(rng);
  }
  const Eigen::MatrixXd rot = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
  for (;;) {
    std::vector<Point> xs;
    for (int i = 0; i <= d; ++i) {
      Point v = basis.transpose() * simplex.row(i).transpose();
      v = v.normalized();
      for (int a = 0; a < d; ++a) v(a) += 0.25 * gauss(rng) / std::sqrt(d);
      xs.push_back(scale(rng) * (rot * v));
    }
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i) {
      for (int j = 0; j < i && ok; ++j) ok = xs[static_cast<std::size_t>(i)].dot(xs[static_cast<std::size_t>(j)]) < 0;
    }
    if (ok) return xs;
  }
}

Check simple_vertex_dihedrals(const std::vector<NamedPolytope>& instances) {
  const std::string title = "dihedrals from face angles at simple vertices";
  return guarded(title, [&] {
    double worst = 0;
    int vertices = 0, solids = 0;
    for (const auto& x : instances) {
      const Polytope& p = x.polytope;
      if (p.dim() != 3) continue;
      const EdgeGraph graph(p);
      bool counted = false;
      for (int v = 0; v < p.num_vertices(); ++v) {
        const auto& nb = graph.neighbors(v);
        if (nb.size() != 3) continue;
        std::array<Eigen::Vector3d, 3> u;
        for (int i = 0; i < 3; ++i) u[static_cast<std::size_t>(i)] = p.vertex(nb[static_cast<std::size_t>(i)]) - p.vertex(v);
        auto ang = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
          return std::acos(std::clamp(a.normalized().dot(b.normalized()), -1.0, 1.0));
        };
        const EdgeDihedrals predicted = dihedral_from_interior_angles({ang(u[0], u[1]), ang(u[1], u[2]), ang(u[2], u[0])});
        for (int j = 0; j < 3; ++j) {
          const double measured = dihedral_angle(p, make_edge(v, nb[static_cast<std::size_t>(j)]));
          worst = std::max(worst, std::abs(measured - predicted[static_cast<std::size_t>(j)]));
        }
        ++vertices;
        counted = true;
      }
      solids += counted ? 1 : 0;
    }
    return Check{title, worst <= 1e-9 && vertices > 0,
                 std::to_string(vertices) + " vertices on " + std::to_string(solids) + " solids, max deviation " +
                     num(worst, 3)};
  });
}

CriterionResult criterion_13(const std::vector<NamedPolytope>& instances) {
  CriterionResult r{13, "appendix properties", {}};
  r.checks.push_back(guarded("positive sum-to-zero coefficients", [] {
    std::mt19937 rng(20240613);
    double worst = 0;
    bool positive = true;
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 1 + trial % 5;
      const auto xs = random_obtuse_frame(rng, d);
      const auto c = sum_to_zero_coefficients(xs);
      Point sum = Point::Zero(d);
      double scale = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        positive = positive && c[i] > 0;
        sum += c[i] * xs[i];
        scale = std::max(scale, c[i] * xs[i].norm());
      }
      worst = std::max(worst, sum.norm() / scale);
    }
    return Check{"positive sum-to-zero coefficients", positive && worst <= 1e-9,
                 "100 instances, d=1..5, max relative residual " + num(worst, 3)};
  }));
  r.checks.push_back(simple_vertex_dihedrals(instances));
  r.checks.push_back(guarded("spherical angle sums = 2pi", [&] {
    std::vector<std::string> tested, bad;
    for (const auto& x : instances) {
      if (x.polytope.dim() != 3) continue;
      const auto v = analyze_bipartite(x.polytope);
      if (!v || !v.report->strict) continue;
      tested.push_back(x.label);
      if (!contains_origin_interior(x.polytope)) {
        bad.push_back(x.label + " (origin not interior)");
        continue;
      }
      const AngleTable table = angle_table(x.polytope, *v.report);
      if (!check_spherical_sums(x.polytope, *v.report, table)) bad.push_back(x.label);
    }
    return Check{"spherical angle sums = 2pi", bad.empty() && tested.size() >= 2,
                 bad.empty() ? join(tested) : "failed: " + join(bad)};
  }));
  return r;
}

std::optional<std::size_t> dihedral_oracle(const Polytope& p) {
  // every symmetry of a polygon centred at the origin is a rotation or reflection
  // sending vertex 0 to some vertex
  const double tol = 1e-7 * std::max(1.0, p.circumradius());
  const VertexLocator locate(p.vertices(), tol);
  const Point& v0 = p.vertex(0);
  const double a0 = std::atan2(v0(1), v0(0));
  std::size_t count = 0;
  for (const auto& w : p.vertices()) {
    if (std::abs(w.norm() - v0.norm()) > tol) continue;
    const double a = std::atan2(w(1), w(0));
    Eigen::Matrix2d rot, ref;
    rot << std::cos(a - a0), -std::sin(a - a0), std::sin(a - a0), std::cos(a - a0);
    ref << std::cos(a + a0), std::sin(a + a0), std::sin(a + a0), -std::cos(a + a0);
    for (const Eigen::Matrix2d& m : {rot, ref}) {
      const bool maps = std::all_of(p.vertices().begin(), p.vertices().end(),
                                    [&](const Point& x) { return locate.find(m * x).has_value(); });
      count += maps ? 1 : 0;
    }
  }
  return count;
}

std::optional<std::size_t> signed_permutation_oracle(const Polytope& p) {
  const int d = p.dim();
  const double h = std::abs(p.vertex(0)(0));
  if (p.num_vertices() != (1 << d)) return std::nullopt;
  for (const auto& v : p.vertices()) {
    for (int a = 0; a < d; ++a) {
      if (std::abs(std::abs(v(a)) - h) > 1e-9 * h) return std::nullopt;
    }
  }
  const VertexLocator locate(p.vertices(), 1e-7 * h);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    for (int signs = 0; signs < (1 << d); ++signs) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
      for (int a = 0; a < d; ++a) m(a, perm[static_cast<std::size_t>(a)]) = (signs >> a) & 1 ? -1.0 : 1.0;
      const bool maps = std::all_of(p.vertices().begin(), p.vertices().end(),
                                    [&](const Point& x) { return locate.find(m * x).has_value(); });
      count += maps ? 1 : 0;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

bool CriterionResult::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<NamedPolytope> reference_instances() {
  std::vector<NamedPolytope> out;
  for (int k = 2; k <= 6; ++k) {
    out.push_back({"bipartite-polygon(k=" + std::to_string(k) + ")", bipartite_polygon(1.0, 1.15, k)});
  }
  for (int k = 2; k <= 6; ++k) out.push_back({"regular-polygon(2k=" + std::to_string(2 * k) + ")", regular_polygon(k)});
  for (int d = 2; d <= 4; ++d) out.push_back({"cube(d=" + std::to_string(d) + ")", cube(d)});
  out.push_back({"hexagonal-prism", cartesian_product(regular_polygon(3), cube(1))});
  out.push_back({"hyperprism(k=3,folds=2)", hyperprism(3, 2)});
  out.push_back({"hyperprism(k=4,folds=2)", hyperprism(4, 2)});
  for (const char* g : {"A3", "B3", "H3", "I1+I2(3)", "I1+I2(4)", "I1+I2(5)"}) {
    out.push_back({std::string("permutahedron(") + g + ")", permutahedron(parse_group(g))});
  }
  out.push_back({"rhombic-hexahedron(stretch=1.5)", rhombic_hexahedron(1.5)});
  out.push_back({"rhombic-dodecahedron", rhombic_dodecahedron()});
  out.push_back({"rhombic-triacontahedron", rhombic_triacontahedron()});
  out.push_back({"bilinski-dodecahedron", bilinski_dodecahedron()});
  out.push_back({"rhombic-icosahedron", rhombic_icosahedron()});
  out.push_back({"icosahedron", icosahedron_from_cube()});
  out.push_back({"near-miss(equilateral)", construct_Q(NearMissVariant::kEquilateral)});
  out.push_back({"near-miss(tangent)", construct_Q(NearMissVariant::kTangent)});
  return out;
}

std::optional<std::size_t> brute_force_symmetry_order(const Polytope& p) {
  if (p.num_vertices() == 0 || p.centroid().norm() > 1e-9 * std::max(1.0, p.circumradius())) return std::nullopt;
  if (p.dim() == 2) return dihedral_oracle(p);
  if (p.dim() >= 1 && p.dim() <= 6) return signed_permutation_oracle(p);
  return std::nullopt;
}

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return {1, "dihedral angles of the rhombic solids", {criterion_1_a(), criterion_1_b()}};
    case 2: return criterion_2();
    case 3: return criterion_3(reference_instances());
    case 4: return criterion_4();
    case 5: return criterion_5();
    case 6: return criterion_6();
    case 7: return criterion_7();
    case 8: return criterion_8();
    case 9: return criterion_9();
    case 10: return criterion_10();
    case 11: return criterion_11();
    case 12: return criterion_12(reference_instances());
    case 13: return criterion_13(reference_instances());
    default: throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteriaCount; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace bipoly
