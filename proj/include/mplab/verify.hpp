#pragma once

// Verification suites run by `mplab verify` and the acceptance tests. Each
// check is deterministic given its seed; reports carry no timings.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mplab {

struct CheckResult {
  std::string id;    // "AC1" .. "AC10"
  std::string name;
  bool passed = false;
  std::string detail;
};

// Tolerances and sizes pinned by the acceptance criteria.
namespace acceptance {
inline constexpr long kGridMax = 4;                 // lambda grid {1..4}^2
inline constexpr long kOracleMax = 3;               // r, lambda_i <= 3
inline constexpr std::size_t kNonCgWeights = 20;
inline constexpr std::size_t kLagrangianCases = 100;
inline constexpr std::size_t kCoadjointSamples = 10000;
inline constexpr double kCoadjointTolerance = 0.05;
inline constexpr double kCoadjointNegativeFloor = 0.5;
inline constexpr std::size_t kDeltaSamples = 100000;
inline constexpr double kRadialTolerance = 0.02;
inline constexpr double kAngularTolerance = 0.05;
inline constexpr double kAngularEps = 0.05;
inline constexpr std::size_t kGradientCases = 100;
inline constexpr double kGradientTolerance = 1e-4;
inline constexpr std::size_t kCatalogMax = 5;
}  // namespace acceptance

CheckResult check_orbit_polytope_table();                        // AC1
CheckResult check_real_polytope_routes();                   // AC2
CheckResult check_clebsch_gordan_completeness();           // AC3
CheckResult check_hwv_oracle(std::uint64_t seed);          // AC4
CheckResult check_hwv_identities();                        // AC5
CheckResult check_lagrangian(std::uint64_t seed);          // AC6
CheckResult check_coadjoint(std::uint64_t seed);           // AC7
CheckResult check_numeric_exact_agreement(std::uint64_t seed);  // AC8
CheckResult check_gradient_identity(std::uint64_t seed);   // AC9
CheckResult check_catalog();                               // AC10

/// Suites: section5 (AC1-5, AC8, AC10), lagrangian (AC6), coadjoint (AC7),
/// gradcheck (AC9), all. Throws std::invalid_argument for unknown names.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

nlohmann::json report_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckResult>& results);

}  // namespace mplab
