#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace unitfield {

// One bounded quantity inside a criterion.  `lower_bound` flips the sense:
// the check passes when the observed value exceeds the bound (used for
// quantities that must stay away from zero).
struct Check {
  std::string name;
  double observed = 0.0;
  double bound = 0.0;
  bool lower_bound = false;
  bool pass() const { return lower_bound ? observed > bound : observed < bound; }
};

struct CriterionResult {
  std::string id;
  std::string statement;
  std::vector<Check> checks;
  bool pass = true;  // conjunction of the checks
};

struct SuiteResult {
  std::string suite;
  std::vector<CriterionResult> criteria;
  bool pass = true;
};

// Suites:
//   identities   -- randomized identity and cross-route checks
//   theorems     -- the catalog scenarios against their known geometry
//   determinism  -- repeated runs must emit identical bytes
//   all          -- the three above, concatenated
// Unknown names throw UsageError.  All randomness is seeded; repeated calls
// return identical results.
SuiteResult run_suite(const std::string& name);

std::string render_suite_table(const SuiteResult& suite);
nlohmann::ordered_json suite_json(const SuiteResult& suite);

}  // namespace unitfield
