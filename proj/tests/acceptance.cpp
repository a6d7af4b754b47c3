// Acceptance gate: each criterion runs at its pinned tolerance and must also
// finish inside its time budget. One PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mplab/verify.hpp"

namespace {

struct Criterion {
  std::function<mplab::CheckResult()> run;
  double budget_seconds;
};

}  // namespace

int main() {
  constexpr std::uint64_t kSeed = 0;
  const std::vector<Criterion> criteria{
      {mplab::check_orbit_polytope_table, 1},
      {mplab::check_real_polytope_routes, 5},
      {mplab::check_clebsch_gordan_completeness, 1},
      {[] { return mplab::check_hwv_oracle(kSeed); }, 30},
      {mplab::check_hwv_identities, 10},
      {[] { return mplab::check_lagrangian(kSeed); }, 5},
      {[] { return mplab::check_coadjoint(kSeed); }, 5},
      {[] { return mplab::check_numeric_exact_agreement(kSeed); }, 30},
      {[] { return mplab::check_gradient_identity(kSeed); }, 10},
      {mplab::check_catalog, 1},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const mplab::CheckResult r = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool ok = r.passed && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s %-4s %-55s %7.3fs (limit %gs)%s  %s\n", ok ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(), secs,
                c.budget_seconds, in_time ? "" : " OVER BUDGET", r.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
