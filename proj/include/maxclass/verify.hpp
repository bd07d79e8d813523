#ifndef MAXCLASS_VERIFY_HPP_
#define MAXCLASS_VERIFY_HPP_

#include <string>
#include <vector>

namespace maxclass {

struct ClaimResult {
  std::string group;      // claim family, e.g. "m4-small"
  std::string statement;  // what was checked
  bool pass = false;
  std::string detail;     // expected/actual on failure, extra info on pass
  double seconds = 0.0;
};

// Runs the full verification grid (exact counts, closed forms, case tables,
// orbit and matrix oracles, combinatorial properties, global assembly).
// `only` restricts to one claim family; empty runs everything.
std::vector<ClaimResult> run_verify(const std::string& only = "");

std::vector<std::string> verify_groups();

}  // namespace maxclass

#endif  // MAXCLASS_VERIFY_HPP_
