#ifndef MAXCLASS_STANDARD_FORM_HPP_
#define MAXCLASS_STANDARD_FORM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "maxclass/root_of_unity.hpp"

namespace maxclass {

// The maximal class group M_n = <a_1,...,a_n,b | [a_i,b] = a_{i+1}> at a
// prime p and level N (representation dimension p^N).
struct GroupSpec {
  int n = 2;
  std::int64_t p = 2;
  int N = 1;

  GroupSpec() = default;
  GroupSpec(int n_, std::int64_t p_, int N_);

  // Exponent arithmetic for a level-N computation lives at modulus p^w with
  // w = N + n, comfortably above the deepest root the closure chain forces.
  int working_exponent() const { return N + n; }
  std::int64_t dimension() const { return pow_i64(p, N); }
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

// Parameters (lambda_2, ..., lambda_n) of a standard-form representation:
// a_i acts as the diagonal matrix with entries lambda_entry(i, j) and b as
// the cyclic shift.  lambda_1 is twist-normalized away; every predicate
// below is independent of it.
struct LambdaTuple {
  GroupSpec spec;
  std::vector<RootOfUnity> lambdas;  // lambda_2 .. lambda_n

  LambdaTuple() = default;
  LambdaTuple(const GroupSpec& spec_, std::vector<RootOfUnity> lambdas_);

  // Convenience: build from exponent residues (e_2,...,e_n) at the spec's
  // working modulus.
  static LambdaTuple from_exponents(const GroupSpec& spec,
                                    const std::vector<std::int64_t>& exps);

  const RootOfUnity& lambda(int i) const;  // i in 2..n
  std::string str() const;
};

bool operator==(const LambdaTuple& a, const LambdaTuple& b);
inline bool operator!=(const LambdaTuple& a, const LambdaTuple& b) {
  return !(a == b);
}
// Lexicographic by exponent; used for deterministic orbit representatives.
bool operator<(const LambdaTuple& a, const LambdaTuple& b);

// j-th diagonal entry of x_i: prod_{k=i}^n lambda_k^{T_{k-i}(j-1)}.
// i = 1 is the twist-normalized first row (lambda_1 := 1).  j in 1..p^N,
// read cyclically beyond that.
RootOfUnity lambda_entry(const LambdaTuple& t, int i, std::int64_t j);

// Well-definedness defect at row i: the cyclic product over a full period,
// in closed form lambda_i^{p^N} * prod_{k>i} lambda_k^{T_{k-i+1}(p^N-1)}.
// The tuple describes a representation iff this is 1 for every i in 2..n.
RootOfUnity closure_defect(const LambdaTuple& t, int i);

// Same quantity as the literal product prod_{m=1}^{p^N} lambda_{i,m}.
RootOfUnity closure_defect_cyclic(const LambdaTuple& t, int i);

bool is_well_defined(const LambdaTuple& t);

// The profile (lambda_{2,k}, ..., lambda_{n,k}); k interpreted mod p^N.
std::vector<RootOfUnity> profile(const LambdaTuple& t, std::int64_t k);

// lambda_{i,p^j+1} / lambda_{i,1} = prod_{k>i} lambda_k^{T_{k-i}(p^j)} for
// i in 1..n-1, 0 <= j <= N.  Identity for all i >= low exactly when the
// profile restricted to rows >= low has period dividing p^j.
RootOfUnity reducibility_ratio(const LambdaTuple& t, int i, int j);

// Minimal j in [0, N] with reducibility_ratio(t, i, j) = 1 for all
// i >= low_index; the restriction to the corresponding subgroup then has
// minimal stable subspace V_{p^j}.
int minimal_period_exponent(const LambdaTuple& t, int low_index);

// Irreducible iff no proper V_{p^k} is stable, i.e. the full profile period
// is exactly p^N.
bool is_irreducible(const LambdaTuple& t);

// Depth criterion, valid for p >= n: irreducible iff some lambda_i has
// depth N.  Rejects p < n.
bool is_irreducible_by_depth(const LambdaTuple& t);

}  // namespace maxclass

#endif  // MAXCLASS_STANDARD_FORM_HPP_
