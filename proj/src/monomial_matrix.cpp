#include "maxclass/monomial_matrix.hpp"

#include <algorithm>

#include "maxclass/errors.hpp"

namespace maxclass {

MonomialMatrix::MonomialMatrix(std::vector<int> col,
                               std::vector<RootOfUnity> coeff)
    : col_(std::move(col)), coeff_(std::move(coeff)) {
  if (col_.empty() || col_.size() != coeff_.size())
    throw usage_error("MonomialMatrix: inconsistent shape");
  std::vector<bool> seen(col_.size(), false);
  for (int c : col_) {
    if (c < 0 || c >= dim() || seen[static_cast<std::size_t>(c)])
      throw usage_error("MonomialMatrix: column map is not a permutation");
    seen[static_cast<std::size_t>(c)] = true;
  }
}

MonomialMatrix MonomialMatrix::identity(int dim, std::int64_t p, int w) {
  std::vector<int> col(static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r) col[static_cast<std::size_t>(r)] = r;
  return MonomialMatrix(
      std::move(col),
      std::vector<RootOfUnity>(static_cast<std::size_t>(dim),
                               RootOfUnity::one(p, w)));
}

MonomialMatrix MonomialMatrix::cyclic_shift(int dim, std::int64_t p, int w) {
  // Row 1 reads basis vector dim, row r reads r-1 (0-based: col[r] = r-1).
  std::vector<int> col(static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r)
    col[static_cast<std::size_t>(r)] = (r + dim - 1) % dim;
  return MonomialMatrix(
      std::move(col),
      std::vector<RootOfUnity>(static_cast<std::size_t>(dim),
                               RootOfUnity::one(p, w)));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<RootOfUnity> entries) {
  std::vector<int> col(entries.size());
  for (std::size_t r = 0; r < entries.size(); ++r)
    col[r] = static_cast<int>(r);
  return MonomialMatrix(std::move(col), std::move(entries));
}

bool MonomialMatrix::is_diagonal() const {
  for (int r = 0; r < dim(); ++r)
    if (col(r) != r) return false;
  return true;
}

MonomialMatrix MonomialMatrix::inverse() const {
  std::vector<int> col(col_.size());
  std::vector<RootOfUnity> coeff(coeff_.size());
  for (int r = 0; r < dim(); ++r) {
    col[static_cast<std::size_t>(this->col(r))] = r;
    coeff[static_cast<std::size_t>(this->col(r))] = maxclass::inverse(this->coeff(r));
  }
  return MonomialMatrix(std::move(col), std::move(coeff));
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim())
    throw usage_error("MonomialMatrix: dimension mismatch");
  std::vector<int> col(static_cast<std::size_t>(a.dim()));
  std::vector<RootOfUnity> coeff(static_cast<std::size_t>(a.dim()));
  for (int r = 0; r < a.dim(); ++r) {
    const int k = a.col(r);
    col[static_cast<std::size_t>(r)] = b.col(k);
    coeff[static_cast<std::size_t>(r)] = mul(a.coeff(r), b.coeff(k));
  }
  return MonomialMatrix(std::move(col), std::move(coeff));
}

bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim() != b.dim()) return false;
  for (int r = 0; r < a.dim(); ++r)
    if (a.col(r) != b.col(r) || a.coeff(r) != b.coeff(r)) return false;
  return true;
}

MonomialMatrix pow(const MonomialMatrix& m, std::int64_t n) {
  MonomialMatrix base = n < 0 ? m.inverse() : m;
  std::int64_t e = n < 0 ? -n : n;
  MonomialMatrix acc =
      MonomialMatrix::identity(m.dim(), m.coeff(0).p, m.coeff(0).w);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace maxclass
