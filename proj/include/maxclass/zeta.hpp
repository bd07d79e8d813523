#ifndef MAXCLASS_ZETA_HPP_
#define MAXCLASS_ZETA_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "maxclass/tnumber.hpp"

namespace maxclass {

// Integer-coefficient polynomials in t = p^{-s}, ascending degree.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b);
std::string poly_str(const Poly& a);

enum class Provenance { paper_proven, conjectural_uniform };
std::string provenance_str(Provenance p);

// A local zeta function as a ratio of polynomials in t = p^{-s} with
// denom(0) = 1, expandable into the coefficient sequence r_{p^N}.
struct RationalSeries {
  Poly numer;
  Poly denom;
  std::int64_t prime = 2;
  Provenance provenance = Provenance::conjectural_uniform;
};

// The uniform local form (1-t)^2 / ((1-p^{n-2} t)(1-p t)), with the common
// (1-t) factor cancelled at n = 2.  Flagged paper-proven for p >= n, for
// n = p+1 and for (n,p) = (4,2); conjectural-uniform otherwise.
RationalSeries local_closed_form(int n, std::int64_t p);

// First K+1 coefficients of the series expansion, by the linear recurrence
// the denominator induces.  Exact integers.
std::vector<BigInt> expand(const RationalSeries& r, int K);

struct GlobalCoefficients {
  int n = 2;
  std::int64_t bound = 1;
  std::vector<BigInt> values;  // values[m-1] = r_m, 1 <= m <= bound

  const BigInt& r(std::int64_t m) const;
};

// Dirichlet coefficients of the global zeta function for n in {2,3,4},
// computed by the Euler product of local expansions and independently by
// the convolution Id_1 * Id_{n-2} * mu * mu; the two must agree.
GlobalCoefficients global_coefficients(int n, std::int64_t bound);

// The convolution path alone (the independent oracle).
std::vector<BigInt> global_by_convolution(int n, std::int64_t bound);

// The Euler-product path alone.
std::vector<BigInt> global_by_euler_product(int n, std::int64_t bound);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);
std::vector<int> moebius_up_to(std::int64_t bound);

}  // namespace maxclass

#endif  // MAXCLASS_ZETA_HPP_
