// Acceptance gate: runs every verification criterion and prints one
// pass/fail line per criterion.  Exits nonzero if any criterion fails.
#include <cstdio>
#include <string>

#include "unitfield/verify.hpp"

using namespace unitfield;

namespace {

// The check closest to (or past) its bound, by ratio.
const Check* binding_check(const CriterionResult& c) {
  const Check* worst = nullptr;
  double worst_ratio = -1.0;
  for (const Check& ch : c.checks) {
    double denom = ch.lower_bound ? (ch.observed == 0.0 ? 1e-300 : ch.observed) : ch.bound;
    double num = ch.lower_bound ? ch.bound : ch.observed;
    double ratio = denom == 0.0 ? 0.0 : num / denom;
    if (!ch.pass()) ratio = 1e300;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &ch;
    }
  }
  return worst;
}

}  // namespace

int main() {
  SuiteResult all = run_suite("all");
  int index = 0;
  int passed = 0;
  for (const CriterionResult& c : all.criteria) {
    ++index;
    if (c.pass) ++passed;
    const Check* b = binding_check(c);
    std::printf("[%2d/%zu] %s  %-24s %s: %.5g %s %.3g\n", index, all.criteria.size(),
                c.pass ? "PASS" : "FAIL", c.id.c_str(), b ? b->name.c_str() : "(no checks)",
                b ? b->observed : 0.0, (b && b->lower_bound) ? ">" : "<", b ? b->bound : 0.0);
    if (!c.pass)
      for (const Check& ch : c.checks)
        if (!ch.pass())
          std::printf("        failed: %s: %.17g %s %.3g\n", ch.name.c_str(), ch.observed,
                      ch.lower_bound ? ">" : "<", ch.bound);
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, all.criteria.size());
  return all.pass ? 0 : 1;
}
