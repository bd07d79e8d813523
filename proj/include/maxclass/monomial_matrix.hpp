#ifndef MAXCLASS_MONOMIAL_MATRIX_HPP_
#define MAXCLASS_MONOMIAL_MATRIX_HPP_

#include <cstdint>
#include <vector>

#include "maxclass/root_of_unity.hpp"

namespace maxclass {

// A square matrix with exactly one root-of-unity entry per row and column:
// row r carries coeff(r) in column col(r).  Products, inverses and equality
// are exact (monomial matrices are closed under multiplication, so no sums
// of roots ever arise).
class MonomialMatrix {
 public:
  MonomialMatrix(std::vector<int> col, std::vector<RootOfUnity> coeff);

  static MonomialMatrix identity(int dim, std::int64_t p, int w);
  // The standard-form image of b: e_j -> e_{j+1} cyclically (1 in the top
  // right corner and on the subdiagonal).
  static MonomialMatrix cyclic_shift(int dim, std::int64_t p, int w);
  static MonomialMatrix diagonal(std::vector<RootOfUnity> entries);

  int dim() const { return static_cast<int>(col_.size()); }
  int col(int row) const { return col_[static_cast<std::size_t>(row)]; }
  const RootOfUnity& coeff(int row) const {
    return coeff_[static_cast<std::size_t>(row)];
  }
  bool is_diagonal() const;

  MonomialMatrix inverse() const;

  friend MonomialMatrix operator*(const MonomialMatrix& a,
                                  const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator!=(const MonomialMatrix& a, const MonomialMatrix& b) {
    return !(a == b);
  }

 private:
  std::vector<int> col_;            // col_[r]: column of row r's entry
  std::vector<RootOfUnity> coeff_;  // coeff_[r]: that entry
};

MonomialMatrix pow(const MonomialMatrix& m, std::int64_t n);

}  // namespace maxclass

#endif  // MAXCLASS_MONOMIAL_MATRIX_HPP_
