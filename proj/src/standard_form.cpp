#include "maxclass/standard_form.hpp"

#include <algorithm>

#include "maxclass/errors.hpp"

namespace maxclass {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GroupSpec::GroupSpec(int n_, std::int64_t p_, int N_) : n(n_), p(p_), N(N_) {
  if (n < 2) throw usage_error("GroupSpec: n must be >= 2");
  if (!is_prime(p)) throw usage_error("GroupSpec: p must be prime");
  if (N < 0) throw usage_error("GroupSpec: level N must be >= 0");
  pow_i64(p, working_exponent());  // reject unrepresentable sizes early
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  return a.n == b.n && a.p == b.p && a.N == b.N;
}

LambdaTuple::LambdaTuple(const GroupSpec& spec_,
                         std::vector<RootOfUnity> lambdas_)
    : spec(spec_), lambdas(std::move(lambdas_)) {
  if (lambdas.size() != static_cast<std::size_t>(spec.n - 1))
    throw usage_error("LambdaTuple: expected " + std::to_string(spec.n - 1) +
                      " roots of unity");
  const int w = spec.working_exponent();
  for (auto& l : lambdas) {
    if (l.p != spec.p) throw usage_error("LambdaTuple: wrong prime");
    if (l.w > w) throw usage_error("LambdaTuple: modulus above working level");
    l = l.rescaled(w);
  }
}

LambdaTuple LambdaTuple::from_exponents(const GroupSpec& spec,
                                        const std::vector<std::int64_t>& exps) {
  std::vector<RootOfUnity> ls;
  ls.reserve(exps.size());
  for (std::int64_t e : exps)
    ls.emplace_back(spec.p, spec.working_exponent(), e);
  return LambdaTuple(spec, std::move(ls));
}

const RootOfUnity& LambdaTuple::lambda(int i) const {
  if (i < 2 || i > spec.n)
    throw usage_error("LambdaTuple::lambda: index must be in 2..n");
  return lambdas[static_cast<std::size_t>(i - 2)];
}

std::string LambdaTuple::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (i) s += ", ";
    s += lambdas[i].str();
  }
  return s + ")";
}

bool operator==(const LambdaTuple& a, const LambdaTuple& b) {
  return a.spec == b.spec && a.lambdas == b.lambdas;
}

bool operator<(const LambdaTuple& a, const LambdaTuple& b) {
  return std::lexicographical_compare(
      a.lambdas.begin(), a.lambdas.end(), b.lambdas.begin(), b.lambdas.end(),
      [](const RootOfUnity& x, const RootOfUnity& y) { return x.e < y.e; });
}

RootOfUnity lambda_entry(const LambdaTuple& t, int i, std::int64_t j) {
  const int n = t.spec.n;
  if (i < 1 || i > n) throw usage_error("lambda_entry: index must be in 1..n");
  if (j < 1) throw usage_error("lambda_entry: position must be >= 1");
  const int w = t.spec.working_exponent();
  RootOfUnity acc = RootOfUnity::one(t.spec.p, w);
  for (int k = std::max(i, 2); k <= n; ++k) {
    const std::int64_t exp = t_number_mod_i64(k - i, j - 1, t.spec.p, w);
    acc = mul(acc, pow(t.lambda(k), exp));
  }
  return acc;
}

RootOfUnity closure_defect(const LambdaTuple& t, int i) {
  const int n = t.spec.n;
  if (i < 2 || i > n) throw usage_error("closure_defect: index must be in 2..n");
  const int w = t.spec.working_exponent();
  const std::int64_t period = t.spec.dimension();
  RootOfUnity acc = pow(t.lambda(i), period);
  for (int k = i + 1; k <= n; ++k) {
    const std::int64_t exp =
        t_number_mod_i64(k - i + 1, period - 1, t.spec.p, w);
    acc = mul(acc, pow(t.lambda(k), exp));
  }
  return acc;
}

RootOfUnity closure_defect_cyclic(const LambdaTuple& t, int i) {
  const int n = t.spec.n;
  if (i < 2 || i > n) throw usage_error("closure_defect: index must be in 2..n");
  RootOfUnity acc = RootOfUnity::one(t.spec.p, t.spec.working_exponent());
  for (std::int64_t m = 1; m <= t.spec.dimension(); ++m)
    acc = mul(acc, lambda_entry(t, i, m));
  return acc;
}

bool is_well_defined(const LambdaTuple& t) {
  for (int i = 2; i <= t.spec.n; ++i)
    if (!closure_defect(t, i).is_one()) return false;
  return true;
}

std::vector<RootOfUnity> profile(const LambdaTuple& t, std::int64_t k) {
  const std::int64_t period = t.spec.dimension();
  std::int64_t j = k % period;
  if (j <= 0) j += period;
  std::vector<RootOfUnity> out;
  out.reserve(static_cast<std::size_t>(t.spec.n - 1));
  for (int i = 2; i <= t.spec.n; ++i) out.push_back(lambda_entry(t, i, j));
  return out;
}

RootOfUnity reducibility_ratio(const LambdaTuple& t, int i, int j) {
  const int n = t.spec.n;
  if (i < 1 || i > n - 1)
    throw usage_error("reducibility_ratio: index must be in 1..n-1");
  if (j < 0 || j > t.spec.N)
    throw usage_error("reducibility_ratio: stability exponent must be in 0..N");
  const int w = t.spec.working_exponent();
  const std::int64_t pj = pow_i64(t.spec.p, j);
  RootOfUnity acc = RootOfUnity::one(t.spec.p, w);
  for (int k = i + 1; k <= n; ++k) {
    const std::int64_t exp = t_number_mod_i64(k - i, pj, t.spec.p, w);
    acc = mul(acc, pow(t.lambda(k), exp));
  }
  return acc;
}

int minimal_period_exponent(const LambdaTuple& t, int low_index) {
  const int n = t.spec.n;
  if (low_index < 1 || low_index > n)
    throw usage_error("minimal_period_exponent: low_index must be in 1..n");
  for (int j = 0; j <= t.spec.N; ++j) {
    bool all_one = true;
    for (int i = low_index; i <= n - 1 && all_one; ++i)
      all_one = reducibility_ratio(t, i, j).is_one();
    if (all_one) return j;
  }
  throw internal_error(
      "minimal_period_exponent: no period within 0..N; tuple not well "
      "defined?");
}

bool is_irreducible(const LambdaTuple& t) {
  return minimal_period_exponent(t, 1) == t.spec.N;
}

bool is_irreducible_by_depth(const LambdaTuple& t) {
  if (t.spec.p < t.spec.n)
    throw usage_error("is_irreducible_by_depth: requires p >= n");
  int max_depth = 0;
  for (const auto& l : t.lambdas) max_depth = std::max(max_depth, l.depth());
  return max_depth == t.spec.N;
}

}  // namespace maxclass
