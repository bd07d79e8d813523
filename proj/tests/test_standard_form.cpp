#include <doctest.h>

#include <vector>

#include "maxclass/enumeration.hpp"
#include "maxclass/errors.hpp"
#include "maxclass/standard_form.hpp"
#include "test_util.hpp"

using maxclass::closure_defect;
using maxclass::closure_defect_cyclic;
using maxclass::enumerate_tuples;
using maxclass::GroupSpec;
using maxclass::is_irreducible;
using maxclass::is_irreducible_by_depth;
using maxclass::is_well_defined;
using maxclass::lambda_entry;
using maxclass::LambdaTuple;
using maxclass::minimal_period_exponent;
using maxclass::mul;
using maxclass::pow_i64;
using maxclass::profile;
using maxclass::reducibility_ratio;
using maxclass::RootOfUnity;
using maxclass::usage_error;
using maxclass_tests::Lcg;
using maxclass_tests::make_tuple;

namespace {

// Small grids with p^N <= 27, used for exhaustive sweeps.
const std::vector<GroupSpec> kSmallGrids = {
    {3, 2, 1}, {3, 2, 2}, {3, 2, 3}, {4, 2, 1}, {4, 2, 2},
    {3, 3, 1}, {3, 3, 2}, {4, 3, 1}, {2, 5, 1}, {5, 2, 2},
};

LambdaTuple random_candidate(const GroupSpec& spec, Lcg& rng) {
  std::vector<std::int64_t> exps;
  for (int i = 2; i <= spec.n; ++i)
    exps.push_back(rng.below(pow_i64(spec.p, spec.working_exponent())));
  return LambdaTuple::from_exponents(spec, exps);
}

}  // namespace

// M_4 at p=2, N=1: lambda_2 = -1, lambda_3 = lambda_4 = 1.  Working modulus
// is 2^5, so -1 has exponent 16.
TEST_CASE("diagonal entries of the flagship small example") {
  const auto t = make_tuple(4, 2, 1, {16, 0, 0});
  CHECK(lambda_entry(t, 2, 1) == t.lambda(2));
  CHECK(lambda_entry(t, 3, 1) == t.lambda(3));
  CHECK(lambda_entry(t, 2, 2) == RootOfUnity(2, 5, 16));  // product of all
  for (std::int64_t j = 1; j <= 2; ++j)
    CHECK(lambda_entry(t, 4, j) == t.lambda(4));  // x_n is scalar
  CHECK(is_well_defined(t));
  CHECK(minimal_period_exponent(t, 1) == 1);
  CHECK(is_irreducible(t));
}

TEST_CASE("x_n is scalar for every tuple") {
  for (const auto& spec : {GroupSpec{3, 3, 2}, GroupSpec{4, 2, 2}})
    for (const auto& t : enumerate_tuples(spec))
      for (std::int64_t j = 1; j <= spec.dimension(); ++j)
        CHECK(lambda_entry(t, spec.n, j) == t.lambda(spec.n));
}

TEST_CASE("shift recursion lambda_{i,j+1} = lambda_{i,j} lambda_{i+1,j+1}") {
  for (const auto& spec : kSmallGrids) {
    for (const auto& t : enumerate_tuples(spec)) {
      for (int i = 1; i <= spec.n - 1; ++i)
        for (std::int64_t j = 1; j < spec.dimension(); ++j)
          CHECK(lambda_entry(t, i, j + 1) ==
                mul(lambda_entry(t, i, j), lambda_entry(t, i + 1, j + 1)));
      // row n is constant, the recursion's base case
      for (std::int64_t j = 1; j < spec.dimension(); ++j)
        CHECK(lambda_entry(t, spec.n, j + 1) == lambda_entry(t, spec.n, j));
    }
  }
}

TEST_CASE("closure defect: closed form equals the cyclic product") {
  // The identity holds for arbitrary candidate tuples, not just valid ones.
  // Exhaustive over the full candidate space where that is small...
  for (const auto& spec : {GroupSpec{3, 2, 1}, GroupSpec{2, 2, 3},
                           GroupSpec{2, 3, 1}, GroupSpec{3, 3, 1}}) {
    const std::int64_t m = pow_i64(spec.p, spec.working_exponent());
    std::vector<std::int64_t> exps(static_cast<std::size_t>(spec.n - 1), 0);
    bool done = false;
    while (!done) {
      const auto t = LambdaTuple::from_exponents(spec, exps);
      for (int i = 2; i <= spec.n; ++i)
        CHECK(closure_defect(t, i) == closure_defect_cyclic(t, i));
      done = true;
      for (auto& e : exps) {
        if (++e < m) {
          done = false;
          break;
        }
        e = 0;
      }
    }
  }
  // ...and randomized at the larger ones.
  Lcg rng(20240811);
  for (const auto& spec : kSmallGrids)
    for (int trial = 0; trial < 40; ++trial) {
      const auto t = random_candidate(spec, rng);
      for (int i = 2; i <= spec.n; ++i)
        CHECK(closure_defect(t, i) == closure_defect_cyclic(t, i));
    }
}

TEST_CASE("closure defect examples") {
  const auto t = make_tuple(4, 2, 1, {16, 0, 0});
  CHECK(closure_defect(t, 2).is_one());

  // row n: defect is lambda_n^(p^N), trivial iff depth(lambda_n) <= N
  const auto deep = make_tuple(3, 2, 1, {0, 4});  // depth(lambda_3) = 2
  CHECK(closure_defect(deep, 3) == pow(deep.lambda(3), std::int64_t{2}));
  CHECK(!is_well_defined(deep));

  const auto trivial = make_tuple(4, 3, 2, {0, 0, 0});
  for (int i = 2; i <= 4; ++i) CHECK(closure_defect(trivial, i).is_one());
  CHECK(is_well_defined(trivial));
}

TEST_CASE("profile periodicity and the translation property") {
  for (const auto& spec : {GroupSpec{3, 2, 2}, GroupSpec{4, 2, 1},
                           GroupSpec{3, 3, 1}, GroupSpec{2, 3, 2}}) {
    const std::int64_t period = spec.dimension();
    for (const auto& t : enumerate_tuples(spec)) {
      CHECK(profile(t, 1) == t.lambdas);
      for (std::int64_t k = 1; k <= period; ++k)
        CHECK(profile(t, k) == profile(t, k + period));
      for (std::int64_t k1 = 1; k1 <= period; ++k1)
        for (std::int64_t k2 = k1 + 1; k2 <= period; ++k2)
          if (profile(t, k1) == profile(t, k2))
            CHECK(profile(t, k1 + 1) == profile(t, k2 + 1));
    }
  }
}

TEST_CASE("profile has period exactly p^minimal_period_exponent(t, 2)") {
  for (const auto& spec : {GroupSpec{4, 2, 2}, GroupSpec{3, 3, 2}}) {
    for (const auto& t : enumerate_tuples(spec)) {
      const std::int64_t period =
          pow_i64(spec.p, minimal_period_exponent(t, 2));
      for (std::int64_t k = 1; k <= spec.dimension(); ++k)
        CHECK(profile(t, k) == profile(t, k + period));
      if (period > 1) {
        const std::int64_t smaller = period / spec.p;
        bool all_equal = true;
        for (std::int64_t k = 1; k <= spec.dimension() && all_equal; ++k)
          all_equal = profile(t, k) == profile(t, k + smaller);
        CHECK(!all_equal);
      }
    }
  }
}

TEST_CASE("reducibility ratio") {
  for (const auto& spec : kSmallGrids)
    for (const auto& t : enumerate_tuples(spec)) {
      // full period: ratio at j = N is the identity
      for (int i = 1; i <= spec.n - 1; ++i)
        CHECK(reducibility_ratio(t, i, spec.N).is_one());
      // last row: ratio is lambda_n^(p^j)
      for (int j = 0; j <= spec.N; ++j)
        CHECK(reducibility_ratio(t, spec.n - 1, j) ==
              pow(t.lambda(spec.n), pow_i64(spec.p, j)));
    }

  // at N = 1, j = 0 the ratio is the plain tail product
  for (const auto& t : enumerate_tuples(GroupSpec{4, 2, 1}))
    for (int i = 1; i <= 3; ++i) {
      RootOfUnity tail = RootOfUnity::one(2, 5);
      for (int k = i + 1; k <= 4; ++k) tail = mul(tail, t.lambda(k));
      CHECK(reducibility_ratio(t, i, 0) == tail);
    }
}

TEST_CASE("minimal period exponent") {
  const auto trivial = make_tuple(4, 2, 2, {0, 0, 0});
  CHECK(minimal_period_exponent(trivial, 1) == 0);

  // restriction can only shrink the period
  for (const auto& spec : {GroupSpec{4, 2, 2}, GroupSpec{3, 2, 2}})
    for (const auto& t : enumerate_tuples(spec))
      CHECK(minimal_period_exponent(t, 2) <= minimal_period_exponent(t, 1));
}

TEST_CASE("irreducibility of the depth pattern (0, 1, 2) at (4, 2, 2)") {
  // lambda_4 = 1, lambda_3 of depth 1, lambda_2 of depth 2 at w = 6
  const auto t = make_tuple(4, 2, 2, {16, 32, 0});
  REQUIRE(t.lambda(2).depth() == 2);
  REQUIRE(t.lambda(3).depth() == 1);
  REQUIRE(t.lambda(4).depth() == 0);
  REQUIRE(is_well_defined(t));
  CHECK(!is_irreducible(t));
}

TEST_CASE("all-identity tuple is reducible for N >= 1") {
  CHECK(!is_irreducible(make_tuple(4, 2, 1, {0, 0, 0})));
  CHECK(!is_irreducible(make_tuple(3, 5, 2, {0, 0})));
}

TEST_CASE("level-1 irreducibility is a tail-product condition") {
  for (const auto& spec :
       {GroupSpec{4, 2, 1}, GroupSpec{3, 3, 1}, GroupSpec{4, 3, 1}})
    for (const auto& t : enumerate_tuples(spec)) {
      bool some_tail = false;
      for (int i = 1; i <= spec.n - 1; ++i) {
        RootOfUnity tail = RootOfUnity::one(spec.p, spec.working_exponent());
        for (int k = i + 1; k <= spec.n; ++k) tail = mul(tail, t.lambda(k));
        some_tail = some_tail || !tail.is_one();
      }
      CHECK(is_irreducible(t) == some_tail);
    }
}

TEST_CASE("depth criterion at p >= n") {
  const GroupSpec spec(3, 5, 2);
  const int w = spec.working_exponent();  // 5^5
  const auto deep = make_tuple(3, 5, 2, {0, pow_i64(5, w - 2)});
  REQUIRE(deep.lambda(3).depth() == 2);
  REQUIRE(is_well_defined(deep));
  CHECK(is_irreducible_by_depth(deep));

  const auto shallow = make_tuple(3, 5, 2, {pow_i64(5, w - 1), 0});
  REQUIRE(shallow.lambda(2).depth() == 1);
  CHECK(!is_irreducible_by_depth(shallow));

  for (const auto& t : enumerate_tuples(spec))
    CHECK(is_irreducible_by_depth(t) == is_irreducible(t));

  CHECK_THROWS_AS(is_irreducible_by_depth(make_tuple(4, 2, 1, {0, 0, 0})),
                  usage_error);
}

TEST_CASE("argument validation") {
  const auto t = make_tuple(3, 2, 1, {0, 0});
  CHECK_THROWS_AS(lambda_entry(t, 0, 1), usage_error);
  CHECK_THROWS_AS(lambda_entry(t, 4, 1), usage_error);
  CHECK_THROWS_AS(lambda_entry(t, 2, 0), usage_error);
  CHECK_THROWS_AS(closure_defect(t, 1), usage_error);
  CHECK_THROWS_AS(reducibility_ratio(t, 3, 0), usage_error);
  CHECK_THROWS_AS(reducibility_ratio(t, 1, 2), usage_error);
  CHECK_THROWS_AS(minimal_period_exponent(t, 0), usage_error);
  CHECK_THROWS_AS(make_tuple(3, 2, 1, {0, 0, 0}), usage_error);
  CHECK_THROWS_AS(GroupSpec(1, 2, 1), usage_error);
  CHECK_THROWS_AS(GroupSpec(3, 4, 1), usage_error);
  CHECK_THROWS_AS(GroupSpec(3, 2, -1), usage_error);
}
