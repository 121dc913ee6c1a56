// Runs every acceptance criterion and prints one line per criterion.
#include <chrono>
#include <cstdio>
#include <exception>

#include "bipoly/acceptance.hpp"

int main() {
  int failed = 0;
  for (int id = 1; id <= bipoly::kCriteriaCount; ++id) {
    const auto start = std::chrono::steady_clock::now();
    bipoly::CriterionResult r;
    try {
      r = bipoly::run_criterion(id);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), {{"run", false, e.what()}}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d. %s (%.2fs)\n", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(), secs);
    for (const auto& c : r.checks) {
      std::printf("         %s %s: %s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.detail.c_str());
    }
    failed += r.pass() ? 0 : 1;
  }
  std::printf("%d of %d criteria passed\n", bipoly::kCriteriaCount - failed, bipoly::kCriteriaCount);
  return failed == 0 ? 0 : 1;
}
