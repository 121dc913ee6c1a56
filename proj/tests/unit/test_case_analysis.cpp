#include <random>

#include "bipoly/case_analysis.hpp"
#include "doctest.h"

using namespace bipoly;

namespace {
// brute force over all set partitions of tau2 into sub-multisets of tau1
Rational brute_force_rhs(const FaceSizes& tau1, const FaceSizes& tau2) {
  const Rational b = K_of(tau1) - 1;
  std::size_t best = tau2.size() + 1;
  std::vector<int> label(tau2.size(), 0);
  for (;;) {
    const int groups = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    bool ok = true;
    for (int g = 0; g < groups && ok; ++g) {
      FaceSizes part;
      for (std::size_t i = 0; i < tau2.size(); ++i)
        if (label[i] == g) part.push_back(tau2[i]);
      for (int x : part) ok = ok && std::count(part.begin(), part.end(), x) <= std::count(tau1.begin(), tau1.end(), x);
    }
    if (ok) best = std::min(best, static_cast<std::size_t>(groups));
    // next restricted growth string
    std::size_t i = tau2.size();
    while (i-- > 1) {
      const int mx = *std::max_element(label.begin(), label.begin() + static_cast<long>(i));
      if (label[i] <= mx) {
        ++label[i];
        std::fill(label.begin() + static_cast<long>(i) + 1, label.end(), 0);
        break;
      }
    }
    if (i == static_cast<std::size_t>(-1) || i == 0) break;
  }
  return b * Rational(static_cast<long long>(best));
}
}  // namespace

TEST_CASE("K and budgets") {
  CHECK(K_of({4, 6, 10}) == Rational(31, 30));
  CHECK(budget_of({4, 6, 8}).bound == Rational(1, 12));
  CHECK_THROWS_AS(budget_of({6, 6, 6}), std::invalid_argument);
  CHECK_THROWS_AS(K_of({4, 5}), std::invalid_argument);
  CHECK(format_type({6, 10, 4, 4}) == "(6,10,4,4)");
}

TEST_CASE("1-types with K > 1") {
  const auto t = enumerate_1_types(10);
  REQUIRE(t.size() == 7);
  CHECK(t[4].tau == FaceSizes{4, 6, 6});
  CHECK(t[4].group == "A3");
  CHECK(t[6].group == "H3");
  // (4,4,2k) always has K > 1; nothing with a middle entry >= 8 does
  for (const auto& r : enumerate_1_types(40)) CHECK((r.tau[1] == 4 || r.tau[1] == 6));
}

TEST_CASE("cheapest grouping matches brute force") {
  std::mt19937 rng(17);
  const std::vector<FaceSizes> tau1s{{4, 6, 10}, {4, 6, 8}, {4, 6, 6}, {4, 4, 6}, {4, 4, 12}};
  for (int trial = 0; trial < 200; ++trial) {
    const FaceSizes& t1 = tau1s[rng() % tau1s.size()];
    FaceSizes t2;
    const int len = 3 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) t2.push_back(t1[rng() % 3]);
    const PairVerdict v = is_infeasible_pair(t1, t2);
    INFO(format_type(t1), " ", format_type(t2));
    CHECK(v.rhs == brute_force_rhs(t1, t2));
    CHECK(v.lhs == Rational(len - 2) - K_of(t2));
    if (v.certificate) CHECK(certificate_sound(*v.certificate, {budget_of(t1)}));
  }
}

TEST_CASE("entries outside every source are undecidable") {
  CHECK(is_infeasible_pair({4, 6, 8}, {6, 10, 4}).status == PairStatus::kUndecidableByBudget);
  CHECK(to_string(PairStatus::kNotRefuted) == "not refuted");
}

TEST_CASE("tampered certificates are rejected") {
  const auto v = is_infeasible_pair({4, 6, 10}, {6, 10, 4, 4});
  REQUIRE(v.certificate);
  const std::vector<EpsilonBudget> src{budget_of({4, 6, 10})};
  CHECK(certificate_sound(*v.certificate, src));
  auto bad = *v.certificate;
  bad.rhs = Rational(1, 30);
  CHECK_FALSE(certificate_sound(bad, src));
  bad = *v.certificate;
  bad.grouping.front().entries.push_back(4);
  CHECK_FALSE(certificate_sound(bad, src));
}

TEST_CASE("adding entries of tau1 keeps a pair infeasible") {
  CHECK(check_subtype_monotonicity({4, 6, 10}, {6, 10, 6}, {4}));
  CHECK(check_subtype_monotonicity({4, 6, 8}, {6, 8, 8}, {6, 6}));
  CHECK_THROWS(check_subtype_monotonicity({4, 6, 8}, {6, 8, 8}, {10}));
}

TEST_CASE("tables match the expected copies; rendering is stable") {
  const TableSet t = reproduce_tables();
  CHECK(compare_with_expected(t).empty());
  CHECK(render_tables_text(t) == render_tables_text(reproduce_tables()));
  CHECK(render_tables_text(t).find("(e2+e3+e5)+e2") != std::string::npos);
  CHECK(tables_json(t)["tables"].size() == 3);
  TableSet broken = t;
  broken.tables[1].rows[0].lhs += 1;
  CHECK(compare_with_expected(broken).size() == 1);
}

TEST_CASE("remaining case arguments") {
  for (int kp = 3; kp <= 5; ++kp) CHECK(exclusive_types_check(kp, 30));
  const auto co = incompatible_1_types(10);
  const auto find = [&](FaceSizes a, FaceSizes b) {
    return std::find_if(co.begin(), co.end(), [&](const Coexistence& c) { return c.a == a && c.b == b; });
  };
  REQUIRE(find({4, 4, 6}, {4, 4, 8}) != co.end());
  CHECK(find({4, 4, 6}, {4, 4, 8})->incompatible);
  CHECK_FALSE(find({4, 4, 4}, {4, 6, 6})->incompatible);
  CHECK(hexagon_parity_argument().verified);
  CHECK(hexagon_parity_argument().counts_rule_a == std::vector<int>{3});
  CHECK(determine_r().r == 5);
  CHECK(exclude_4442k(3).excluded);
  CHECK_FALSE(exclude_4442k(2).excluded);
  CHECK(dihedral_sum_obstruction());
}
