#pragma once

#include "bipoly/rational.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bipoly {

/// Face sizes 2k at a vertex, in the order written (not necessarily sorted).
using FaceSizes = std::vector<int>;

/// K(tau) = sum of 1/k_i = sum of 2/(2k_i). Throws std::invalid_argument for
/// entries that are odd or below 4.
Rational K_of(const FaceSizes& tau);

/// "(4,6,8)"
std::string format_type(const FaceSizes& tau);

struct KERecord {
  FaceSizes tau;      // sorted
  Rational K;
  int s = 0;
  std::string group;  // reflection group whose permutahedron has this vertex type
};

/// Every triple 4 <= 2k1 <= 2k2 <= 2k3 <= max_2k of even numbers with K > 1,
/// listed (4,4,2k) first, then (4,6,2k').
std::vector<KERecord> enumerate_1_types(int max_2k);

/// A source of budget: sums of eps over any nonempty sub-multiset of `tau`
/// are below `bound`.
struct EpsilonBudget {
  FaceSizes tau;
  Rational bound;
};

/// Budget of a 1-vertex type: K(tau) - 1. Throws std::invalid_argument if it is not positive.
EpsilonBudget budget_of(const FaceSizes& tau1);

struct Group {
  FaceSizes entries;
  int source = 0;  // index into the budget list
};

struct InfeasibilityCertificate {
  FaceSizes tau1, tau2;
  std::vector<Group> grouping;
  Rational lhs;  // s - 2 - K(tau2)
  Rational rhs;  // total budget of the grouping
};

enum class PairStatus { kInfeasible, kNotRefuted, kUndecidableByBudget };
std::string to_string(PairStatus s);

struct PairVerdict {
  PairStatus status = PairStatus::kNotRefuted;
  std::optional<InfeasibilityCertificate> certificate;  // set iff infeasible
  std::vector<Group> grouping;                          // cheapest grouping found, if any
  Rational lhs, rhs;
};

/// Cheapest partition of tau2 into nonempty sub-multisets of the budget types,
/// each group charged its source's bound; nullopt if some entry is covered by
/// no source. Exhaustive search; ties keep the first grouping found.
std::optional<std::vector<Group>> cheapest_grouping(const FaceSizes& tau2, const std::vector<EpsilonBudget>& sources);

/// The adjacent pair (tau1, tau2) is infeasible when s - 2 - K(tau2) >= total
/// budget of the cheapest grouping, with tau1 the only budget source.
PairVerdict is_infeasible_pair(const FaceSizes& tau1, const FaceSizes& tau2);
PairVerdict is_infeasible_pair(const FaceSizes& tau1, const FaceSizes& tau2, const std::vector<EpsilonBudget>& sources);

/// Re-derives lhs and rhs from scratch and checks the grouping covers tau2.
bool certificate_sound(const InfeasibilityCertificate& c, const std::vector<EpsilonBudget>& sources);

/// Whether (tau1, tau2 + extension) is still infeasible. Throws
/// std::invalid_argument if (tau1, tau2) is not infeasible or an extension
/// entry does not occur in tau1.
bool check_subtype_monotonicity(const FaceSizes& tau1, const FaceSizes& tau2, const FaceSizes& extension);

struct TableRow {
  FaceSizes tau2;
  Rational lhs, rhs;
  std::vector<FaceSizes> grouping;  // as computed
  bool infeasible = false;
};

struct CaseTable {
  std::string name;  // "4610", "468", "466"
  FaceSizes tau1;
  std::vector<TableRow> rows;
};

/// A row of the (4,4,2k) table with 2k substituted, swept over k.
struct ParametricRow {
  std::string pattern;      // "(4,2k,4,4,4)"
  std::string lhs_formula;  // "1-1/k"
  std::string rhs_formula;  // "2/k"
  int k_min = 3, k_max = 50;
  std::vector<int> infeasible_k, feasible_k;
  bool formulas_match = false;  // lhs/rhs equal the closed forms for every k
  bool margin_increasing = false;  // lhs - rhs strictly increasing in k
};

struct TableSet {
  std::vector<CaseTable> tables;
  std::vector<ParametricRow> parametric;
};

TableSet reproduce_tables(int k_max = 50);

struct ExpectedRow {
  FaceSizes tau2;
  Rational lhs, rhs;
  std::vector<FaceSizes> grouping;  // the published grouping
};
struct ExpectedTable {
  std::string name;
  FaceSizes tau1;
  std::vector<ExpectedRow> rows;
};

/// The published tables, embedded.
const std::vector<ExpectedTable>& expected_tables();

/// Differences between computed and published tables (empty when they agree).
/// Published groupings are checked to be valid groupings of the same size.
std::vector<std::string> compare_with_expected(const TableSet& computed);

std::string render_tables_text(const TableSet& t);
nlohmann::json tables_json(const TableSet& t);

/// Pair ((4,6,2k'),(6,2k',2k,4)) with budgets from (4,6,2k') and (4,4,2k), for
/// every k in 4..max_k with 2k not in {4, 6, 2k'}: infeasible, agreeing with
/// 1/k + 1/k' <= 2/3.
bool exclusive_types_check(int kprime, int max_k);

struct Coexistence {
  FaceSizes a, b;
  FaceSizes rest_a, rest_b;  // after cancelling the common sub-multiset
  bool incompatible = false;
};

/// Pairs of Table-1 types that cannot both be 1-vertex types: equal spherical
/// angle sums cancel to beta^x = beta^y with x != y.
std::vector<Coexistence> incompatible_1_types(int max_2k);

struct HexagonParity {
  std::vector<int> counts_rule_a;  // (6,6)-edge counts allowed by the 1-vertex rule
  std::vector<int> counts_rule_b;  // ... by the 2-vertex rule
  int labelings_a = 0, labelings_b = 0, labelings_both = 0;
  bool verified = false;
};

/// Exhaustive over the 2^6 labelings of a hexagon's edges.
HexagonParity hexagon_parity_argument();

struct RDetermination {
  int r = 0;
  std::vector<std::string> trace;
};

/// Which (4^r) vertex type survives next to (4,4,6) and (4,6,4,6); checks r in
/// 3..r_max exactly and returns the unique survivor (5).
RDetermination determine_r(int r_max = 12);

struct Cancellation {
  bool applicable = false;
  bool excluded = false;
  std::string trace;
};

/// (4,4,4,2k) next to (4,2k,4,2k): cancelling leaves beta^2 = beta^k.
Cancellation exclude_4442k(int k);

/// Every triple from {120, 144} degrees sums to at least 360.
bool dihedral_sum_obstruction();

}  // namespace bipoly
