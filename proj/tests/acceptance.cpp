// Acceptance suite: runs the full verification grid and prints one
// pass/fail line per criterion, with failing claims spelled out.
#include <cstdio>
#include <map>
#include <vector>

#include "maxclass/verify.hpp"

int main() {
  const std::vector<std::pair<int, std::string>> criteria = {
      {1, "m4-small"}, {2, "m4-deep"}, {3, "thm1"},    {4, "uniform"},
      {5, "tables"},   {6, "case-formulas"}, {7, "orbits"},  {8, "matrix"},
      {9, "lemmas"},   {10, "global"},
  };

  std::vector<maxclass::ClaimResult> results;
  try {
    results = maxclass::run_verify();
  } catch (const std::exception& e) {
    std::printf("FAIL verification aborted: %s\n", e.what());
    return 1;
  }

  struct Tally {
    int pass = 0;
    int fail = 0;
    double seconds = 0.0;
    std::vector<const maxclass::ClaimResult*> failures;
  };
  std::map<std::string, Tally> tallies;
  for (const auto& r : results) {
    auto& tally = tallies[r.group];
    (r.pass ? tally.pass : tally.fail) += 1;
    tally.seconds += r.seconds;
    if (!r.pass) tally.failures.push_back(&r);
  }

  bool all_pass = true;
  for (const auto& [number, group] : criteria) {
    const auto& tally = tallies[group];
    const bool pass = tally.fail == 0 && tally.pass > 0;
    all_pass = all_pass && pass;
    std::printf("criterion %2d [%-13s] %s  (%d claims, %.2f s)\n", number,
                group.c_str(), pass ? "PASS" : "FAIL",
                tally.pass + tally.fail, tally.seconds);
    for (const auto* failure : tally.failures)
      std::printf("    FAIL %s -- %s\n", failure->statement.c_str(),
                  failure->detail.c_str());
  }
  std::printf("%s\n", all_pass ? "all criteria pass" : "CRITERIA FAILED");
  return all_pass ? 0 : 1;
}
