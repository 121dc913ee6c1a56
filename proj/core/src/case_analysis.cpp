#include "bipoly/case_analysis.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bipoly {
namespace {

int count_of(const FaceSizes& xs, int x) { return static_cast<int>(std::count(xs.begin(), xs.end(), x)); }

FaceSizes sorted(FaceSizes xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

bool is_submultiset(const FaceSizes& small, const FaceSizes& big) {
  for (int x : small) {
    if (count_of(small, x) > count_of(big, x)) return false;
  }
  return true;
}

std::string eps_sum(const FaceSizes& group) {
  std::string s;
  for (int x : sorted(group)) s += (s.empty() ? "" : "+") + std::string("e") + std::to_string(x / 2);
  return group.size() > 1 ? "(" + s + ")" : s;
}

std::string grouping_str(const std::vector<FaceSizes>& groups) {
  std::string s;
  for (const auto& g : groups) s += (s.empty() ? "" : "+") + eps_sum(g);
  return s;
}

// numerator over a fixed denominator when it divides evenly, else p/q
std::string over(const Rational& q, const Integer& den) {
  const Rational scaled = q * Rational(den);
  if (boost::multiprecision::denominator(scaled) == 1) {
    return boost::multiprecision::numerator(scaled).str() + "/" + den.str();
  }
  return to_string(q);
}

std::vector<FaceSizes> entries_of(const std::vector<Group>& gs) {
  std::vector<FaceSizes> out;
  for (const auto& g : gs) out.push_back(g.entries);
  return out;
}

FaceSizes substitute(const FaceSizes& pattern, int two_k) {
  FaceSizes out;
  for (int x : pattern) out.push_back(x == 0 ? two_k : x);
  return out;
}

}  // namespace

Rational K_of(const FaceSizes& tau) {
  Rational k = 0;
  for (int x : tau) {
    if (x < 4 || x % 2 != 0) throw std::invalid_argument("face sizes must be even and at least 4");
    k += Rational(2, x);
  }
  return k;
}

std::string format_type(const FaceSizes& tau) {
  std::string s = "(";
  for (std::size_t i = 0; i < tau.size(); ++i) s += (i ? "," : "") + std::to_string(tau[i]);
  return s + ")";
}

std::vector<KERecord> enumerate_1_types(int max_2k) {
  if (max_2k < 4) throw std::invalid_argument("enumerate_1_types: max_2k must be >= 4");
  std::vector<KERecord> out;
  auto group_name = [](const FaceSizes& t) -> std::string {
    if (t[1] == 4) return t[2] == 4 ? "I1+I1+I1" : "I1+I2(" + std::to_string(t[2] / 2) + ")";
    if (t == FaceSizes{4, 6, 6}) return "A3";
    if (t == FaceSizes{4, 6, 8}) return "B3";
    if (t == FaceSizes{4, 6, 10}) return "H3";
    return "";
  };
  std::vector<FaceSizes> found;
  for (int a = 4; a <= max_2k; a += 2) {
    for (int b = a; b <= max_2k; b += 2) {
      for (int c = b; c <= max_2k; c += 2) {
        if (K_of({a, b, c}) > 1) found.push_back({a, b, c});
      }
    }
  }
  // (4,4,2k) rows first, then the rest, each in increasing order
  std::stable_partition(found.begin(), found.end(), [](const FaceSizes& t) { return t[1] == 4; });
  for (const auto& t : found) out.push_back({t, K_of(t), 3, group_name(t)});
  return out;
}

EpsilonBudget budget_of(const FaceSizes& tau1) {
  const Rational b = K_of(tau1) - 1;
  if (b <= 0) throw std::invalid_argument("type " + format_type(tau1) + " has no positive budget");
  return {sorted(tau1), b};
}

std::string to_string(PairStatus s) {
  switch (s) {
    case PairStatus::kInfeasible: return "infeasible";
    case PairStatus::kNotRefuted: return "not refuted";
    case PairStatus::kUndecidableByBudget: return "undecidable by budget";
  }
  return "?";
}

std::optional<std::vector<Group>> cheapest_grouping(const FaceSizes& tau2, const std::vector<EpsilonBudget>& sources) {
  for (int x : tau2) {
    if (std::none_of(sources.begin(), sources.end(), [x](const EpsilonBudget& s) { return count_of(s.tau, x) > 0; })) {
      return std::nullopt;
    }
  }
  std::optional<std::vector<Group>> best;
  Rational best_cost = 0;
  std::vector<Group> cur;
  std::function<void(std::size_t, const Rational&)> dfs = [&](std::size_t i, const Rational& cost) {
    if (best && cost >= best_cost) return;
    if (i == tau2.size()) {
      best = cur;
      best_cost = cost;
      return;
    }
    const int x = tau2[i];
    // index, not reference: the recursion grows `cur`
    for (std::size_t gi = 0; gi < cur.size(); ++gi) {
      if (count_of(cur[gi].entries, x) < count_of(sources[static_cast<std::size_t>(cur[gi].source)].tau, x)) {
        cur[gi].entries.push_back(x);
        dfs(i + 1, cost);
        cur[gi].entries.pop_back();
      }
    }
    for (std::size_t s = 0; s < sources.size(); ++s) {
      if (count_of(sources[s].tau, x) == 0) continue;
      cur.push_back({{x}, static_cast<int>(s)});
      dfs(i + 1, cost + sources[s].bound);
      cur.pop_back();
    }
  };
  dfs(0, Rational(0));
  return best;
}

PairVerdict is_infeasible_pair(const FaceSizes& tau1, const FaceSizes& tau2, const std::vector<EpsilonBudget>& sources) {
  PairVerdict v;
  v.lhs = Rational(static_cast<long long>(tau2.size()) - 2) - K_of(tau2);
  const auto grouping = cheapest_grouping(tau2, sources);
  if (!grouping) {
    v.status = PairStatus::kUndecidableByBudget;
    return v;
  }
  v.grouping = *grouping;
  v.rhs = 0;
  for (const auto& g : v.grouping) v.rhs += sources[static_cast<std::size_t>(g.source)].bound;
  if (v.lhs >= v.rhs) {
    v.status = PairStatus::kInfeasible;
    v.certificate = InfeasibilityCertificate{tau1, tau2, v.grouping, v.lhs, v.rhs};
  } else {
    v.status = PairStatus::kNotRefuted;
  }
  return v;
}

PairVerdict is_infeasible_pair(const FaceSizes& tau1, const FaceSizes& tau2) {
  return is_infeasible_pair(tau1, tau2, {budget_of(tau1)});
}

bool certificate_sound(const InfeasibilityCertificate& c, const std::vector<EpsilonBudget>& sources) {
  FaceSizes all;
  Rational rhs = 0;
  for (const auto& g : c.grouping) {
    if (g.entries.empty() || g.source < 0 || static_cast<std::size_t>(g.source) >= sources.size()) return false;
    const auto& src = sources[static_cast<std::size_t>(g.source)];
    if (!is_submultiset(g.entries, src.tau)) return false;
    all.insert(all.end(), g.entries.begin(), g.entries.end());
    rhs += src.bound;
  }
  if (sorted(all) != sorted(c.tau2)) return false;
  const Rational lhs = Rational(static_cast<long long>(c.tau2.size()) - 2) - K_of(c.tau2);
  return lhs == c.lhs && rhs == c.rhs && lhs >= rhs;
}

bool check_subtype_monotonicity(const FaceSizes& tau1, const FaceSizes& tau2, const FaceSizes& extension) {
  if (is_infeasible_pair(tau1, tau2).status != PairStatus::kInfeasible) {
    throw std::invalid_argument("check_subtype_monotonicity: base pair is not infeasible");
  }
  for (int x : extension) {
    if (count_of(tau1, x) == 0) throw std::invalid_argument("check_subtype_monotonicity: extension entry not in tau1");
  }
  FaceSizes bigger = tau2;
  bigger.insert(bigger.end(), extension.begin(), extension.end());
  return is_infeasible_pair(tau1, bigger).status == PairStatus::kInfeasible;
}

const std::vector<ExpectedTable>& expected_tables() {
  auto R = [](long long p, long long q) { return Rational(p, q); };
  static const std::vector<ExpectedTable> tables{
      {"4610",
       {4, 6, 10},
       {
           {{6, 10, 6}, R(4, 30), R(2, 30), {{6, 10}, {6}}},
           {{6, 10, 10}, R(8, 30), R(2, 30), {{6, 10}, {10}}},
           {{6, 10, 4, 4}, R(14, 30), R(2, 30), {{4, 6, 10}, {4}}},
       }},
      {"468",
       {4, 6, 8},
       {
           {{6, 8, 8}, R(2, 12), R(2, 12), {{6, 8}, {8}}},
           {{6, 8, 4, 4}, R(5, 12), R(2, 12), {{4, 6, 8}, {4}}},
           {{6, 8, 4, 6}, R(7, 12), R(2, 12), {{4, 6, 8}, {6}}},
           {{6, 8, 6, 6}, R(9, 12), R(3, 12), {{6, 8}, {6}, {6}}},
       }},
      {"466",
       {4, 6, 6},
       {
           {{6, 6, 4, 4}, R(2, 6), R(2, 6), {{4, 6, 6}, {4}}},
           {{6, 6, 6, 4}, R(3, 6), R(2, 6), {{4, 6, 6}, {6}}},
           {{6, 6, 6, 6}, R(4, 6), R(2, 6), {{6, 6}, {6, 6}}},
       }},
  };
  return tables;
}

TableSet reproduce_tables(int k_max) {
  TableSet out;
  for (const auto& exp : expected_tables()) {
    CaseTable t{exp.name, exp.tau1, {}};
    for (const auto& row : exp.rows) {
      const PairVerdict v = is_infeasible_pair(exp.tau1, row.tau2);
      t.rows.push_back({row.tau2, v.lhs, v.rhs, entries_of(v.grouping), v.status == PairStatus::kInfeasible});
    }
    out.tables.push_back(std::move(t));
  }

  struct Param {
    FaceSizes pattern;  // 0 stands for 2k
    std::string pattern_str, lhs_str, rhs_str;
    std::function<Rational(long long)> lhs, rhs;
  };
  const std::vector<Param> params{
      {{4, 0, 4, 4, 4}, "(4,2k,4,4,4)", "1-1/k", "2/k",
       [](long long k) { return Rational(1) - Rational(1, k); }, [](long long k) { return Rational(2, k); }},
      {{4, 0, 4, 4, 0}, "(4,2k,4,4,2k)", "3/2-2/k", "2/k",
       [](long long k) { return Rational(3, 2) - Rational(2, k); }, [](long long k) { return Rational(2, k); }},
      {{4, 0, 4, 0}, "(4,2k,4,2k)", "1-2/k", "2/k",
       [](long long k) { return Rational(1) - Rational(2, k); }, [](long long k) { return Rational(2, k); }},
  };
  for (const auto& p : params) {
    ParametricRow row{p.pattern_str, p.lhs_str, p.rhs_str, 3, k_max, {}, {}, true, true};
    std::optional<Rational> prev_margin;
    for (int k = 3; k <= k_max; ++k) {
      const PairVerdict v = is_infeasible_pair({4, 4, 2 * k}, substitute(p.pattern, 2 * k));
      row.formulas_match = row.formulas_match && v.lhs == p.lhs(k) && v.rhs == p.rhs(k);
      const Rational margin = v.lhs - v.rhs;
      if (prev_margin && !(margin > *prev_margin)) row.margin_increasing = false;
      prev_margin = margin;
      (v.status == PairStatus::kInfeasible ? row.infeasible_k : row.feasible_k).push_back(k);
    }
    out.parametric.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> compare_with_expected(const TableSet& computed) {
  std::vector<std::string> diffs;
  for (const auto& exp : expected_tables()) {
    const auto it = std::find_if(computed.tables.begin(), computed.tables.end(),
                                 [&](const CaseTable& t) { return t.name == exp.name; });
    if (it == computed.tables.end()) {
      diffs.push_back("missing table " + exp.name);
      continue;
    }
    if (it->tau1 != exp.tau1) diffs.push_back(exp.name + ": tau1 differs");
    if (it->rows.size() != exp.rows.size()) {
      diffs.push_back(exp.name + ": row count differs");
      continue;
    }
    const Rational budget = budget_of(exp.tau1).bound;
    for (std::size_t i = 0; i < exp.rows.size(); ++i) {
      const auto& e = exp.rows[i];
      const auto& c = it->rows[i];
      const std::string where = exp.name + " row " + format_type(e.tau2) + ": ";
      if (c.tau2 != e.tau2) diffs.push_back(where + "tau2 differs");
      if (c.lhs != e.lhs) diffs.push_back(where + "lhs " + to_string(c.lhs) + " != " + to_string(e.lhs));
      if (c.rhs != e.rhs) diffs.push_back(where + "rhs " + to_string(c.rhs) + " != " + to_string(e.rhs));
      if (!c.infeasible) diffs.push_back(where + "not certified infeasible");
      if (c.grouping.size() != e.grouping.size()) diffs.push_back(where + "group count differs");
      FaceSizes all;
      for (const auto& g : e.grouping) {
        if (!is_submultiset(g, exp.tau1)) diffs.push_back(where + "published group " + format_type(g) + " is not a subtype of tau1");
        all.insert(all.end(), g.begin(), g.end());
      }
      if (sorted(all) != sorted(e.tau2)) diffs.push_back(where + "published grouping does not cover tau2");
      if (budget * Rational(static_cast<long long>(e.grouping.size())) != e.rhs) {
        diffs.push_back(where + "published bound does not match its grouping");
      }
    }
  }
  const std::map<std::string, std::vector<int>> expected_feasible{
      {"(4,2k,4,4,4)", {}}, {"(4,2k,4,4,2k)", {}}, {"(4,2k,4,2k)", {3}}};
  for (const auto& [pattern, feasible] : expected_feasible) {
    const auto it = std::find_if(computed.parametric.begin(), computed.parametric.end(),
                                 [&](const ParametricRow& r) { return r.pattern == pattern; });
    if (it == computed.parametric.end()) {
      diffs.push_back("missing parametric row " + pattern);
      continue;
    }
    if (!it->formulas_match) diffs.push_back(pattern + ": lhs/rhs differ from the closed forms");
    if (!it->margin_increasing) diffs.push_back(pattern + ": lhs - rhs is not increasing in k");
    if (it->feasible_k != feasible) diffs.push_back(pattern + ": unexpected set of unrefuted k");
  }
  return diffs;
}

std::string render_tables_text(const TableSet& t) {
  std::ostringstream os;
  for (const auto& table : t.tables) {
    const EpsilonBudget b = budget_of(table.tau1);
    const Integer den = boost::multiprecision::denominator(b.bound);
    os << "tau1 = " << format_type(table.tau1) << "   K(tau1)-1 = " << to_string(b.bound) << "\n";
    os << "  " << std::left << std::setw(14) << "tau2" << std::right << std::setw(8) << "s-2-K" << "  "
       << std::setw(4) << "?<" << "  " << std::left << std::setw(28) << "E(tau2) grouping" << "bound\n";
    for (const auto& r : table.rows) {
      os << "  " << std::left << std::setw(14) << format_type(r.tau2) << std::right << std::setw(8) << over(r.lhs, den)
         << "  " << std::setw(4) << (r.infeasible ? "not<" : "<") << "  " << std::left << std::setw(28)
         << grouping_str(r.grouping) << "< " << over(r.rhs, den) << "\n";
    }
    os << "\n";
  }
  os << "tau1 = (4,4,2k), k = " << (t.parametric.empty() ? 0 : t.parametric.front().k_min) << ".."
     << (t.parametric.empty() ? 0 : t.parametric.front().k_max) << "\n";
  for (const auto& p : t.parametric) {
    os << "  " << std::left << std::setw(16) << p.pattern << std::setw(10) << p.lhs_formula << "vs "
       << std::setw(6) << p.rhs_formula << "closed forms " << (p.formulas_match ? "match" : "DIFFER")
       << ", margin " << (p.margin_increasing ? "increasing" : "NOT increasing") << ", unrefuted k: {";
    for (std::size_t i = 0; i < p.feasible_k.size(); ++i) os << (i ? "," : "") << p.feasible_k[i];
    os << "}\n";
  }
  return os.str();
}

nlohmann::json tables_json(const TableSet& t) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& table : t.tables) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"tau2", r.tau2},
                      {"lhs", to_string(r.lhs)},
                      {"rhs", to_string(r.rhs)},
                      {"grouping", r.grouping},
                      {"infeasible", r.infeasible}});
    }
    tables.push_back({{"name", table.name},
                      {"tau1", table.tau1},
                      {"budget", to_string(budget_of(table.tau1).bound)},
                      {"rows", rows}});
  }
  nlohmann::json params = nlohmann::json::array();
  for (const auto& p : t.parametric) {
    params.push_back({{"pattern", p.pattern},
                      {"lhs", p.lhs_formula},
                      {"rhs", p.rhs_formula},
                      {"k_range", {p.k_min, p.k_max}},
                      {"formulas_match", p.formulas_match},
                      {"margin_increasing", p.margin_increasing},
                      {"infeasible_k", p.infeasible_k},
                      {"unrefuted_k", p.feasible_k}});
  }
  return {{"tables", tables}, {"parametric", params}};
}

bool exclusive_types_check(int kprime, int max_k) {
  if (kprime < 3 || kprime > 5) throw std::invalid_argument("exclusive_types_check: k' must be 3, 4 or 5");
  if (max_k < 4) throw std::invalid_argument("exclusive_types_check: max_k must be >= 4");
  const FaceSizes tau1{4, 6, 2 * kprime};
  for (int k = 4; k <= max_k; ++k) {
    if (k == kprime) continue;
    const std::vector<EpsilonBudget> sources{budget_of(tau1), {{4, 4, 2 * k}, Rational(1, k)}};
    const FaceSizes tau2{6, 2 * kprime, 2 * k, 4};
    const PairVerdict v = is_infeasible_pair(tau1, tau2, sources);
    const bool closed_form = Rational(1, k) + Rational(1, kprime) <= Rational(2, 3);
    if (v.status != PairStatus::kInfeasible || !closed_form) return false;
    if (!certificate_sound(*v.certificate, sources)) return false;
  }
  return true;
}

std::vector<Coexistence> incompatible_1_types(int max_2k) {
  const auto types = enumerate_1_types(max_2k);
  std::vector<Coexistence> out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      Coexistence c{types[i].tau, types[j].tau, types[i].tau, types[j].tau, false};
      for (int x : types[i].tau) {
        const auto it = std::find(c.rest_b.begin(), c.rest_b.end(), x);
        if (it != c.rest_b.end()) {
          c.rest_b.erase(it);
          c.rest_a.erase(std::find(c.rest_a.begin(), c.rest_a.end(), x));
        }
      }
      // beta^x = beta^y with x != y contradicts injectivity of the face size -> angle map
      c.incompatible = c.rest_a.size() == 1 && c.rest_b.size() == 1 && c.rest_a[0] != c.rest_b[0];
      out.push_back(std::move(c));
    }
  }
  return out;
}

HexagonParity hexagon_parity_argument() {
  // edge i joins hexagon vertices i and i+1; even vertices are 1-vertices
  HexagonParity h;
  std::vector<int> a, b;
  for (int mask = 0; mask < 64; ++mask) {
    auto is66 = [mask](int e) { return (mask >> (((e % 6) + 6) % 6)) & 1; };
    bool rule_a = true, rule_b = true;
    for (int v = 0; v < 6; ++v) {
      const int incident = is66(v) + is66(v - 1);
      if (v % 2 == 0) rule_a = rule_a && incident == 1;
      else rule_b = rule_b && incident % 2 == 0;
    }
    const int count = __builtin_popcount(static_cast<unsigned>(mask));
    if (rule_a) {
      ++h.labelings_a;
      a.push_back(count);
    }
    if (rule_b) {
      ++h.labelings_b;
      b.push_back(count);
    }
    if (rule_a && rule_b) ++h.labelings_both;
  }
  auto uniq = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  h.counts_rule_a = uniq(a);
  h.counts_rule_b = uniq(b);
  const bool a_is_three = h.counts_rule_a == std::vector<int>{3};
  const bool b_even = std::all_of(h.counts_rule_b.begin(), h.counts_rule_b.end(), [](int c) { return c % 2 == 0; });
  h.verified = h.labelings_a > 0 && h.labelings_b > 0 && a_is_three && b_even && h.labelings_both == 0;
  return h;
}

RDetermination determine_r(int r_max) {
  // angles in units of pi
  RDetermination out;
  std::vector<int> survivors;
  for (int r = 3; r <= r_max; ++r) {
    const Rational b2_4 = Rational(2, r);
    const Rational b2_6 = Rational(1) - Rational(2, r);
    const Rational b1_4_lower = Rational(1) - Rational(2, r);
    const Rational b1_6_lower = Rational(1, 3) + Rational(2, r);
    const Rational sum_lower = 2 * b1_4_lower + b1_6_lower;
    std::string line = "r=" + std::to_string(r) + ": beta2^2=" + to_string(b2_4) + "pi, beta2^3=" + to_string(b2_6) +
                       "pi, beta1^2>" + to_string(b1_4_lower) + "pi, beta1^3>" + to_string(b1_6_lower) + "pi; ";
    if (sum_lower >= 2) {
      line += "rejected: 2beta1^2+beta1^3 > " + to_string(sum_lower) + "pi >= 2pi (needs r<6)";
    } else if (b2_4 == b2_6) {
      line += "rejected: beta2^2 = beta2^3 for different face sizes";
    } else if (b1_6_lower >= 1) {
      line += "rejected: beta1^3 > pi";
    } else {
      line += "consistent";
      survivors.push_back(r);
    }
    out.trace.push_back(line);
  }
  if (survivors.size() != 1) throw std::logic_error("determine_r: expected a unique surviving r");
  out.r = survivors.front();
  return out;
}

Cancellation exclude_4442k(int k) {
  Cancellation c;
  if (k < 2) throw std::invalid_argument("exclude_4442k: k must be >= 2");
  FaceSizes a{4, 4, 4, 2 * k}, b{4, 2 * k, 4, 2 * k};
  FaceSizes rest_a = a, rest_b;
  for (int x : b) {
    const auto it = std::find(rest_a.begin(), rest_a.end(), x);
    if (it != rest_a.end()) rest_a.erase(it);
    else rest_b.push_back(x);
  }
  c.trace = format_type(a) + " vs " + format_type(b) + " cancels to " + format_type(rest_a) + " = " + format_type(rest_b);
  c.applicable = rest_a.size() == 1 && rest_b.size() == 1;
  c.excluded = c.applicable && rest_a[0] != rest_b[0];
  return c;
}

bool dihedral_sum_obstruction() {
  const int angles[] = {120, 144};
  for (int a : angles) {
    for (int b : angles) {
      for (int c : angles) {
        if (a + b + c < 360) return false;
      }
    }
  }
  return true;
}

}  // namespace bipoly
