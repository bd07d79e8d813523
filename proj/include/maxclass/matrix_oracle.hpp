#ifndef MAXCLASS_MATRIX_ORACLE_HPP_
#define MAXCLASS_MATRIX_ORACLE_HPP_

#include <string>
#include <vector>

#include "maxclass/monomial_matrix.hpp"
#include "maxclass/standard_form.hpp"

namespace maxclass {

// Explicit standard-form generators: x[i-1] is the diagonal image of a_i
// (with x_1 twist-normalized to lambda_1 = 1, which no predicate here
// depends on) and y is the cyclic shift.  This layer verifies tuples by
// means that share no code path with the profile-period predicate.
struct StandardFormGenerators {
  GroupSpec spec;
  std::vector<MonomialMatrix> x;  // x_1 .. x_n
  MonomialMatrix y;
};

StandardFormGenerators build_rep(const LambdaTuple& t);

struct RelationCheck {
  bool ok = true;
  std::string failed;  // first failing relation, empty when ok
};

// Exact verification of the presentation relations satisfied by standard
// form: y has order p^N, the x_i commute pairwise, x_n is central, and
// conjugation by y sends x_i to x_i * (y^-1 x_{i+1} y).  The wraparound
// entries of the conjugation relations fail exactly when a closure
// condition is violated.
RelationCheck check_relations(const StandardFormGenerators& gens);

// Exact stability test for V_{p^k}, the span of the <y>-orbit of
// e_1 + e_{p^k+1} + ... : a vector lies in it iff its coordinates are
// constant on residue classes of positions mod p^k.
bool subspace_stable(const StandardFormGenerators& gens, int k);

struct CommutantResult {
  int dimension = 0;
  // Smallest factor separating any singular value from the rank threshold;
  // verdicts with margin < 10 are flagged as borderline.
  double margin = 0.0;
  bool conditioning_warning = false;
};

// Numeric commutant of the generator set via a rank-revealing decomposition
// of the stacked Sylvester system {A : A g = g A}.  Dimension 1 means
// irreducible (Schur).  Rejects dimensions above the cap.
CommutantResult commutant_dimension(const StandardFormGenerators& gens,
                                    double tolerance = 1e-6,
                                    int dimension_cap = 16);

}  // namespace maxclass

#endif  // MAXCLASS_MATRIX_ORACLE_HPP_
