#include <gtest/gtest.h>

#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"
#include "lininv/weights.hpp"
#include "oracle.hpp"

using namespace lininv;

TEST(Weights, DimensionByLength) {
  for (std::size_t m = 3; m <= 9; ++m) {
    const WeightSpace space = solve_weight_space(m);
    EXPECT_EQ(space.dimension, m % 2 == 1 ? 1U : 0U) << m;
    EXPECT_EQ(space.basis.size(), space.dimension);
    EXPECT_EQ(space.rank + space.dimension, std::size_t{1} << (m - 2));
  }
}

TEST(Weights, OddBasisIsTheParityProduct) {
  for (std::size_t m : {3U, 5U, 7U}) {
    const WeightSpace space = solve_weight_space(m);
    ASSERT_EQ(space.basis.size(), 1U);
    EXPECT_TRUE(space.basis[0].proportional_to(WeightFunction::parity_product(m)));
    EXPECT_TRUE(check_condition_star(space.basis[0]).holds);
  }
}

TEST(Weights, ParityProductFailsForEvenLength) {
  const StarCheck check = check_condition_star(WeightFunction::parity_product(4));
  ASSERT_FALSE(check.holds);
  ASSERT_TRUE(check.counterexample.has_value());
  EXPECT_EQ(check.counterexample->eps.length(), 4U);
}

TEST(Weights, SignFlipPreservesConditionStar) {
  for (std::size_t m : {3U, 5U}) {
    const WeightFunction f = WeightFunction::parity_product(m);
    std::vector<mpq_class> negated;
    for (const mpq_class& v : f.table()) negated.emplace_back(-v);
    const WeightFunction g(m, negated);
    EXPECT_TRUE(check_condition_star(g).holds);
    EXPECT_TRUE(g.proportional_to(f));
  }
  EXPECT_TRUE(check_condition_star(WeightFunction::zero(3)).holds);
}

TEST(Weights, NonProportionalFunctionFails) {
  std::vector<mpq_class> table(8, 0);  // m = 5
  table[0] = 1;
  EXPECT_FALSE(check_condition_star(WeightFunction(5, table)).holds);
}

TEST(Weights, WeightedCountWithParityProductIsN) {
  oracle::Generator gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = gen.uniform(3, 7);
    const oracle::Vec v = gen.generic_rational(m);
    const AlphaVector a = oracle::to_alpha(v);
    const WeightFunction f = WeightFunction::parity_product(m);
    for (std::size_t j = 2; j <= m; ++j) {
      EXPECT_EQ(weighted_count(a, PairSelection(1, j), f), mpq_class(oracle::brute_force(v, 1, j).signed_count));
    }
  }
}

TEST(Weights, ConstraintSystemShape) {
  const ConstraintSystem sys = build_constraints(4);
  EXPECT_EQ(sys.m, 4U);
  EXPECT_EQ(sys.unknowns, 4U);
  EXPECT_FALSE(sys.rows.empty());
  for (const ConstraintRow& row : sys.rows) {
    for (const auto& [mask, coefficient] : row.terms) {
      EXPECT_LT(mask, sys.unknowns);
      EXPECT_NE(coefficient, 0);
    }
  }
  EXPECT_THROW(build_constraints(2), PreconditionError);
  EXPECT_THROW(solve_weight_space(64), PreconditionError);
}
