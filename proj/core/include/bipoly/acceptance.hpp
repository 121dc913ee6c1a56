#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipoly/polytope.hpp"

namespace bipoly {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  bool pass() const;
};

struct NamedPolytope {
  std::string label;
  Polytope polytope;
};

// Fixed set of catalog instances used by the suite, the benchmarks and the tests.
std::vector<NamedPolytope> reference_instances();

// Order of the symmetry group found by exhaustive search over a candidate family:
// dihedral maps for polygons, signed permutation matrices for cubes. Empty otherwise.
std::optional<std::size_t> brute_force_symmetry_order(const Polytope& p);

inline constexpr int kCriteriaCount = 13;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

}  // namespace bipoly
