#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geopos/graph.hpp"

namespace geopos {

/// One reproduced claim: named result, instance, claimed vs computed value,
/// certification method, and wall time.
struct ReproRow {
  std::string theorem;
  std::string instance;
  long long claimed = 0;
  long long computed = 0;
  std::string method;
  bool verified = false;
  bool budget_exhausted = false;
  double wall_ms = 0.0;
};

/// Outcome of one of the exhaustive property suites.
struct SuiteOutcome {
  long long cases = 0;
  long long passed = 0;
  std::string first_failure;  // empty when everything passed
};

SuiteOutcome run_matching_equivalence_suite(std::uint64_t budget = kDefaultBudget);
SuiteOutcome run_oracle_suite(std::uint64_t budget = kDefaultBudget);
SuiteOutcome run_partial_cube_suite();

const std::vector<std::string>& reproduce_scopes();

/// Runs the claim matrix for one scope ("all" or a scope from
/// reproduce_scopes()); every row carries its own verification verdict.
std::vector<ReproRow> run_reproduce(const std::string& scope,
                                    std::uint64_t budget = kDefaultBudget);

nlohmann::json rows_to_json(const std::vector<ReproRow>& rows);
std::string rows_to_table(const std::vector<ReproRow>& rows);

}  // namespace geopos
