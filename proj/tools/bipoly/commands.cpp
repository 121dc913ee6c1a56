#include "commands.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "bipoly/acceptance.hpp"
#include "bipoly/bipartite.hpp"
#include "bipoly/case_analysis.hpp"
#include "bipoly/predicates.hpp"
#include "bipoly/symmetry.hpp"

namespace bipoly::cli {
namespace {

std::string counts(const Polytope& p) {
  std::ostringstream os;
  os << p.dim() << "-polytope: " << p.num_vertices() << " vertices, " << p.num_edges() << " edges";
  if (p.dim() >= 3) os << ", " << two_faces(p).size() << " 2-faces";
  return os.str();
}

std::string reason_text(NonBipartiteReason r) {
  switch (r) {
    case NonBipartiteReason::kUnequalEdges: return "unequal edge lengths";
    case NonBipartiteReason::kOddCycle: return "odd cycle in the edge graph";
    case NonBipartiteReason::kRadiusSpread: return "class conflict";
  }
  return "?";
}

std::string transitivity_text(const TransitivityReport& t) {
  if (t.vertex_transitive && t.edge_transitive) return "vertex- and edge-transitive";
  if (t.edge_transitive) return "edge-transitive; not vertex-transitive";
  if (t.vertex_transitive) return "vertex-transitive; not edge-transitive";
  return "neither vertex- nor edge-transitive";
}

std::string bipartite_text(const BipartiteVerdict& v) {
  if (!v) return "not bipartite: " + reason_text(*v.reason);
  return v.report->strict ? "strictly bipartite" : "bipartite (r1=r2)";
}

Polytope load_convex(const std::filesystem::path& path) {
  const Polytope p = load_polytope(path);
  const auto problems = validate_polytope(p);
  if (!problems.empty()) {
    std::string msg = "invalid polytope in " + path.string() + ":";
    for (const auto& s : problems) msg += "\n  " + s;
    throw std::invalid_argument(msg);
  }
  return p;
}

}  // namespace

std::string analysis_summary(const Polytope& p, double tolerance) {
  const auto v = analyze_bipartite(p, Tolerance(tolerance));
  return bipartite_text(v) + "; " + transitivity_text(classify_transitivity(p));
}

CommandResult cmd_generate(const GenerateOptions& opt) {
  const Polytope p = build_catalog(opt.name, opt.params);
  CommandResult r;
  if (opt.output) {
    save_polytope(*opt.output, p, opt.format);
    r.text = "wrote " + opt.output->string() + ": " + counts(p) + "\n";
  } else {
    std::ostringstream os;
    if (opt.format == FileFormat::kOff) write_off(os, p);
    else os << std::setw(2) << polytope_to_json(p) << "\n";
    r.text = os.str();
  }
  r.json = nlohmann::json{{"name", opt.name},
                          {"dim", p.dim()},
                          {"vertices", p.num_vertices()},
                          {"edges", p.num_edges()},
                          {"output", opt.output ? opt.output->string() : "-"}};
  return r;
}

CommandResult cmd_analyze(const std::filesystem::path& path, double tolerance) {
  const Polytope p = load_convex(path);
  const Tolerance tol(tolerance);
  const BipartiteVerdict v = analyze_bipartite(p, tol);
  const TransitivityReport t = classify_transitivity(p);
  std::ostringstream os;
  os << path.string() << ": " << counts(p) << "\n";
  os << bipartite_text(v) << "; " << transitivity_text(t) << "\n";
  nlohmann::json j{{"file", path.string()}, {"bipartite", bipartite_json(p, v)}, {"transitivity", to_json(t)}};
  if (v) {
    const auto& pr = v.report->params;
    os << std::setprecision(10) << "  r1 = " << pr.r1 << ", r2 = " << pr.r2 << ", edge = " << pr.ell
       << ", edge in-radius = " << pr.rho << "\n";
    if (p.dim() >= 2) {
      try {
        const AngleTable table = angle_table(p, *v.report, tol);
        os << "  face angles (deg):\n";
        for (const auto& [size, a] : table.by_size) {
          os << "    " << size << "-gons x" << a.count << ": alpha1 " << a.alpha1 * 180 / std::numbers::pi << ", alpha2 "
             << a.alpha2 * 180 / std::numbers::pi;
          if (p.dim() == 3) os << ", beta1 " << a.beta1 * 180 / std::numbers::pi << ", beta2 " << a.beta2 * 180 / std::numbers::pi;
          os << "\n";
        }
        j["angles"] = to_json(table);
      } catch (const std::exception& e) {
        os << "  face angles: " << e.what() << "\n";
      }
    }
  } else if (!v.detail.empty()) {
    os << "  " << v.detail << "\n";
  }
  if (p.dim() == 3) {
    const auto census = vertex_types(p).census();
    os << "  vertex types:";
    for (const auto& [type, n] : census) os << " " << type << " x" << n;
    os << "\n";
    j["vertex_types"] = census;
  }
  os << "  symmetry group order " << t.group_order << "; " << t.vertex_orbits << " vertex orbit(s), "
     << t.edge_orbits << " edge orbit(s); " << t.classification << "\n";
  return {kOk, os.str(), j};
}

CommandResult cmd_symmetry(const std::filesystem::path& path) {
  const Polytope p = load_convex(path);
  const TransitivityReport t = classify_transitivity(p);
  std::ostringstream os;
  os << "group order:   " << t.group_order << "\n"
     << "vertex orbits: " << t.vertex_orbits << "\n"
     << "edge orbits:   " << t.edge_orbits << "\n"
     << "arc orbits:    " << t.arc_orbits << "\n"
     << "class:         " << t.classification << "\n";
  return {kOk, os.str(), to_json(t)};
}

CommandResult cmd_tables(bool check_expected) {
  const TableSet t = reproduce_tables();
  CommandResult r{kOk, render_tables_text(t), tables_json(t)};
  if (check_expected) {
    const auto diffs = compare_with_expected(t);
    (*r.json)["expected_diffs"] = diffs;
    if (diffs.empty()) {
      r.text += "all rows match the expected tables\n";
    } else {
      r.exit_code = kVerificationFailed;
      for (const auto& d : diffs) r.text += "MISMATCH " + d + "\n";
    }
  }
  return r;
}

CommandResult cmd_nearmiss(NearMissVariant variant, const std::optional<std::filesystem::path>& output,
                           std::optional<FileFormat> format) {
  const GoldenNumber identity = near_miss_identity();
  const NearMissReport rep = near_miss_report(variant);
  std::ostringstream os;
  os << "(4phi-3)^2 + (3phi-1)^2 = 25phi^2 - 30phi + 10 = " << identity << " = 1 + phi^10\n";
  // truncated, not rounded, so the printed digits are all correct
  os << std::fixed << std::setprecision(8) << "|OA| / |OC| = " << std::floor(rep.ratio * 1e8) / 1e8 << "...\n";
  os << std::setprecision(4) << "gap = " << rep.gap_percent << "%\n";
  os << std::defaultfloat << std::setprecision(10) << "variant " << to_string(variant) << ": apex height "
     << rep.apex_height << ", measured radius ratio " << rep.measured_ratio << ", edge spread " << rep.edge_spread
     << (rep.tangent ? ", edge-tangent sphere" : ", no edge-tangent sphere") << "\n";
  os << "Q is not bipartite: " << rep.reason << "\n";
  if (output) {
    const Polytope q = construct_Q(variant);
    save_polytope(*output, q, format ? *format : format_for_path(*output));
    os << "wrote " << output->string() << ": " << counts(q) << "\n";
  }
  return {kOk, os.str(), to_json(rep)};
}

CommandResult cmd_verify_paper() {
  CommandResult r;
  nlohmann::json items = nlohmann::json::array();
  std::ostringstream os;
  std::optional<std::string> first_failure;
  int passed = 0;
  for (int id = 1; id <= kCriteriaCount; ++id) {
    CriterionResult c;
    try {
      c = run_criterion(id);
    } catch (const std::exception& e) {
      c = {id, "criterion " + std::to_string(id), {{"run", false, e.what()}}};
    }
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& ch : c.checks) {
      os << (ch.pass ? "PASS " : "FAIL ") << std::setw(2) << id << ". " << c.title << ": " << ch.name;
      if (!ch.detail.empty()) os << " (" << ch.detail << ")";
      os << "\n";
      checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
      if (!ch.pass && !first_failure) first_failure = std::to_string(id) + ". " + c.title + ": " + ch.name;
    }
    passed += c.pass() ? 1 : 0;
    items.push_back({{"id", id}, {"title", c.title}, {"pass", c.pass()}, {"checks", checks}});
  }
  os << passed << " of " << kCriteriaCount << " criteria passed\n";
  if (first_failure) {
    os << "first failing criterion: " << *first_failure << "\n";
    r.exit_code = kVerificationFailed;
  }
  r.text = os.str();
  r.json = nlohmann::json{{"criteria", items}, {"passed", passed}, {"total", kCriteriaCount}};
  return r;
}

}  // namespace bipoly::cli
