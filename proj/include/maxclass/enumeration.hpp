#ifndef MAXCLASS_ENUMERATION_HPP_
#define MAXCLASS_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "maxclass/standard_form.hpp"

namespace maxclass {

// Streams every well-defined tuple exactly once, deterministically:
// lambda_n ascending over the p^N roots of depth <= N, then for
// i = n-1 down to 2 the solutions of the row-i closure condition ascending.
// Total is always p^(N(n-1)).  Requires N >= 1.
void enumerate_tuples(const GroupSpec& spec,
                      const std::function<void(const LambdaTuple&)>& sink);
std::vector<LambdaTuple> enumerate_tuples(const GroupSpec& spec);

// The shout action of Z/p^N: lambda_i -> lambda_{i,shift+1}.  Well-defined
// tuples map to well-defined tuples and shifts compose additively.
LambdaTuple shout_shift(const LambdaTuple& t, std::int64_t shift);

// An orbit of the shout action.
struct ShoutOrbit {
  LambdaTuple representative;  // lexicographically minimal member
  std::int64_t size = 1;       // a power of p dividing p^N
};

std::vector<LambdaTuple> orbit_members(const LambdaTuple& t);
ShoutOrbit orbit_of(const LambdaTuple& t);

// Orbit size without iterating the action: p^minimal_period_exponent(t, 2).
// When p >= n-1 this is cross-checked against p^max{s(lambda_3..lambda_n)}.
std::int64_t orbit_size_fast(const LambdaTuple& t);

struct EnumerationReport {
  std::int64_t tuples_total = 0;
  std::int64_t irreducible_total = 0;
  std::int64_t isoclasses = 0;  // shout orbits of irreducible tuples
};

// Number of twist isoclasses of irreducible p^N-dimensional representations,
// counted two independent ways (exact rational orbit-size aggregation and
// canonical-representative deduplication) that must agree.  jobs > 1
// partitions the stream by lambda_n residue; the result is schedule
// independent.
EnumerationReport count_report(const GroupSpec& spec, int jobs = 1);
std::int64_t count_twist_isoclasses(const GroupSpec& spec, int jobs = 1);

// Case labels of the two analyzed families: M_{p+1} at p ("C1", "C2.1",
// "C2.2") and M_4 at p = 2 ("C1".."C8" plus subcases of C6 and C7).
struct CaseLabel {
  enum class Family { mp1, m4_at_2 };
  Family family = Family::mp1;
  int major = 1;
  int minor = 0;  // 0 = no subcase

  std::string str() const;
};

bool operator==(const CaseLabel& a, const CaseLabel& b);
bool operator<(const CaseLabel& a, const CaseLabel& b);

// Depth-pattern classification of a well-defined tuple.  Requires the spec
// to be M_4 at p=2 with N >= 2, or M_{p+1} at p.
CaseLabel classify_case(const LambdaTuple& t);

struct CaseCountReport {
  // Orbit counts of irreducible tuples per major case ("C1".."C8" for M_4
  // at 2; "C1","C2.1","C2.2" for M_{p+1}).
  std::map<std::string, std::int64_t> major;
  // Subcase splits where defined ("C6.1".."C6.4", "C7.1", "C7.2").
  std::map<std::string, std::int64_t> sub;
  std::int64_t total = 0;
};

CaseCountReport case_counts(const GroupSpec& spec);

}  // namespace maxclass

#endif  // MAXCLASS_ENUMERATION_HPP_
