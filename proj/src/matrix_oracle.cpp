#include "maxclass/matrix_oracle.hpp"

#include <complex>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "maxclass/errors.hpp"

namespace maxclass {

StandardFormGenerators build_rep(const LambdaTuple& t) {
  const auto& spec = t.spec;
  const int dim = static_cast<int>(spec.dimension());
  const int w = spec.working_exponent();
  std::vector<MonomialMatrix> x;
  x.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 1; i <= spec.n; ++i) {
    std::vector<RootOfUnity> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (int j = 1; j <= dim; ++j) entries.push_back(lambda_entry(t, i, j));
    x.push_back(MonomialMatrix::diagonal(std::move(entries)));
  }
  return StandardFormGenerators{
      spec, std::move(x), MonomialMatrix::cyclic_shift(dim, spec.p, w)};
}

RelationCheck check_relations(const StandardFormGenerators& gens) {
  const int n = gens.spec.n;
  const auto& y = gens.y;
  const auto y_inv = y.inverse();
  auto conj = [&](const MonomialMatrix& m) { return y_inv * m * y; };

  if (pow(y, gens.spec.dimension()) !=
      MonomialMatrix::identity(y.dim(), gens.spec.p,
                               gens.spec.working_exponent()))
    return {false, "y^(p^N) != 1"};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& xi = gens.x[static_cast<std::size_t>(i - 1)];
      const auto& xj = gens.x[static_cast<std::size_t>(j - 1)];
      if (xi * xj != xj * xi)
        return {false, "x_" + std::to_string(i) + " x_" + std::to_string(j) +
                           " != x_" + std::to_string(j) + " x_" +
                           std::to_string(i)};
    }
  if (conj(gens.x[static_cast<std::size_t>(n - 1)]) !=
      gens.x[static_cast<std::size_t>(n - 1)])
    return {false,
            "y^-1 x_" + std::to_string(n) + " y != x_" + std::to_string(n)};
  for (int i = 1; i <= n - 1; ++i) {
    const auto& xi = gens.x[static_cast<std::size_t>(i - 1)];
    const auto& xnext = gens.x[static_cast<std::size_t>(i)];
    if (conj(xi) != xi * conj(xnext))
      return {false, "y^-1 x_" + std::to_string(i) + " y != x_" +
                         std::to_string(i) + " (y^-1 x_" +
                         std::to_string(i + 1) + " y)"};
  }
  return {};
}

bool subspace_stable(const StandardFormGenerators& gens, int k) {
  if (k < 0 || k > gens.spec.N)
    throw usage_error("subspace_stable: exponent must be in 0..N");
  const int dim = gens.y.dim();
  const int block = static_cast<int>(pow_i64(gens.spec.p, k));

  // V_{p^k} is spanned by the indicators of the residue classes of basis
  // positions mod p^k.  A monomial matrix sends a class indicator to a
  // vector with one entry per class member; that image lies in the span
  // iff its support is again a single class and its entries all agree.
  auto maps_into = [&](const MonomialMatrix& g) {
    std::vector<int> row_of_col(static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r)
      row_of_col[static_cast<std::size_t>(g.col(r))] = r;
    for (int m = 0; m < block; ++m) {
      int image_class = -1;
      const RootOfUnity* value = nullptr;
      for (int j = m; j < dim; j += block) {
        const int r = row_of_col[static_cast<std::size_t>(j)];
        if (image_class < 0) {
          image_class = r % block;
          value = &g.coeff(r);
        } else if (r % block != image_class || *value != g.coeff(r)) {
          return false;
        }
      }
    }
    return true;
  };

  for (const auto& xi : gens.x)
    if (!maps_into(xi)) return false;
  return maps_into(gens.y);
}

namespace {

using CMatrix = Eigen::MatrixXcd;

CMatrix to_complex(const MonomialMatrix& m) {
  CMatrix out = CMatrix::Zero(m.dim(), m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    const auto& c = m.coeff(r);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(c.e) /
                         static_cast<double>(c.modulus());
    out(r, m.col(r)) = std::polar(1.0, angle);
  }
  return out;
}

}  // namespace

CommutantResult commutant_dimension(const StandardFormGenerators& gens,
                                    double tolerance, int dimension_cap) {
  const int dim = gens.y.dim();
  if (dim > dimension_cap)
    throw usage_error("commutant_dimension: dimension " + std::to_string(dim) +
                      " exceeds cap " + std::to_string(dimension_cap));
  if (tolerance <= 0 || tolerance >= 1)
    throw usage_error("commutant_dimension: tolerance must be in (0, 1)");
  if (dim == 1)
    return {1, std::numeric_limits<double>::infinity(), false};

  std::vector<CMatrix> mats;
  for (const auto& xi : gens.x) mats.push_back(to_complex(xi));
  mats.push_back(to_complex(gens.y));

  // Stacked Sylvester system: row ((gi, r, c)), unknown A_{r', c'} at index
  // r'*dim + c'; the constraint is (A g - g A)_{r c} = 0.
  const int unknowns = dim * dim;
  CMatrix system = CMatrix::Zero(static_cast<int>(mats.size()) * unknowns,
                                 unknowns);
  for (std::size_t gi = 0; gi < mats.size(); ++gi) {
    const CMatrix& g = mats[gi];
    const int base = static_cast<int>(gi) * unknowns;
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const int row = base + r * dim + c;
        for (int k = 0; k < dim; ++k) {
          system(row, r * dim + k) += g(k, c);   // A_{r k} g_{k c}
          system(row, k * dim + c) -= g(r, k);   // -g_{r k} A_{k c}
        }
      }
  }

  Eigen::BDCSVD<CMatrix> svd(system);
  const auto& sigma = svd.singularValues();
  const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  const double threshold = tolerance * largest;

  CommutantResult result;
  result.margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < sigma.size(); ++i) {
    const double s = sigma(i);
    if (s < threshold) ++result.dimension;
    const double ratio = s >= threshold
                             ? s / threshold
                             : (s > 0.0 ? threshold / s
                                        : std::numeric_limits<double>::infinity());
    result.margin = std::min(result.margin, ratio);
  }
  result.conditioning_warning = result.margin < 10.0;
  if (result.dimension == 0)
    throw internal_error(
        "commutant_dimension: scalars always commute; empty null space "
        "indicates a tolerance problem");
  return result;
}

}  // namespace maxclass
