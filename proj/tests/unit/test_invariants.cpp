#include <gtest/gtest.h>

#include "lininv/alpha_vector.hpp"
#include "lininv/config.hpp"
#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"
#include "oracle.hpp"

using namespace lininv;

namespace {

std::vector<std::vector<int>> as_lists(const SolutionSet& set) {
  std::vector<std::vector<int>> out;
  for (const SignVector& eps : set.solutions) out.push_back(eps.signs());
  return out;
}

}  // namespace

TEST(Invariants, IntroExample) {
  const AlphaVector a = AlphaVector::from_integers({4, 6, 7, 9, 11});
  const SolutionSet set = enumerate_solutions(a, PairSelection(1, 2));
  ASSERT_EQ(set.solutions.size(), 2U);
  EXPECT_EQ(set.solutions[0].to_string(), "(+,-,+)");
  EXPECT_EQ(set.solutions[1].to_string(), "(+,+,-)");
  EXPECT_EQ(set.solutions[0].coordinate_map(), (std::vector<std::size_t>{3, 4, 5}));
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = i + 1; j <= 5; ++j) {
      EXPECT_EQ(signed_count(a, PairSelection(i, j)), -2);
      EXPECT_EQ(parity(a, PairSelection(i, j)), 0);
    }
  }
  EXPECT_EQ(closed_form_g(a), -2);
}

TEST(Invariants, EvenExampleDependsOnLargerComponent) {
  const AlphaVector a = AlphaVector::from_integers({2, 3, 4, 8});
  const InvariantReport report = verify_invariance(a);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.parity_invariant);
  ASSERT_TRUE(report.signed_count_depends_on_max_only.has_value());
  EXPECT_TRUE(*report.signed_count_depends_on_max_only);
  EXPECT_FALSE(report.signed_count_invariant.has_value());
  EXPECT_EQ(report.signed_count_by_max_omitted.at(parse_scalar("8")), 1);
  EXPECT_EQ(report.signed_count_by_max_omitted.at(parse_scalar("4")), -1);
  EXPECT_EQ(report.signed_count_by_max_omitted.at(parse_scalar("3")), -1);
  EXPECT_EQ(closed_form_g(a), 0);
}

TEST(Invariants, EnumerationSolutionSet) {
  const AlphaVector a = AlphaVector::from_integers({2, 3, 4, 8});
  const SolutionSet set = enumerate_solutions(a, PairSelection(3, 4));
  ASSERT_EQ(set.solutions.size(), 1U);
  EXPECT_EQ(set.solutions[0].to_string(), "(+,+)");
  EXPECT_EQ(as_lists(set), oracle::solutions({2, 3, 4, 8}, 3, 4));
}

TEST(Invariants, ExtendedSignedCount) {
  const AlphaVector a = AlphaVector::from_integers({2, 3, 4, 8});
  EXPECT_EQ(extended_signed_count(a, PairSelection(1, 2), 4), -1);
  EXPECT_EQ(extended_signed_count(a, PairSelection(1, 3), 4), -1);
  EXPECT_THROW(extended_signed_count(a, PairSelection(1, 2), 2), PreconditionError);
  EXPECT_THROW(extended_signed_count(AlphaVector::from_integers({2, 3, 4}), PairSelection(1, 2), 3),
               PreconditionError);
}

TEST(Invariants, DegenerateInputsCarryWitness) {
  const AlphaVector a = AlphaVector::from_integers({1, 2, 3});
  EXPECT_THROW(signed_count(a, PairSelection(1, 2)), DegenerateError);
  EXPECT_THROW(signed_count(AlphaVector::from_integers({4, 6, 7}), PairSelection(1, 4)), PreconditionError);
  EXPECT_THROW(closed_form_g(a), DegenerateError);
}

TEST(Invariants, MatchesOracleOnRandomVectors) {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = gen.uniform(3, 8);
    const oracle::Vec v = gen.generic_rational(m);
    const AlphaVector a = oracle::to_alpha(v);
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = i + 1; j <= m; ++j) {
        const PairTally t = tally_solutions(a, PairSelection(i, j));
        const oracle::Counts c = oracle::brute_force(v, i, j);
        ASSERT_EQ(static_cast<std::int64_t>(t.count), c.count) << a.to_string() << " " << i << "," << j;
        ASSERT_EQ(t.signed_count, c.signed_count) << a.to_string() << " " << i << "," << j;
        ASSERT_EQ(count_via_sign_sum(a, PairSelection(i, j)), c.count);
        if (m % 2 == 0) ASSERT_EQ(signed_count_even_via_sign_sum(a, PairSelection(i, j)), c.signed_count);
      }
    }
    ASSERT_EQ(closed_form_g(a), oracle::g(v));
    ASSERT_TRUE(verify_invariance(a).ok()) << a.to_string();
  }
}

TEST(Invariants, ScalingLeavesCountsUnchanged) {
  oracle::Generator gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const AlphaVector a = oracle::to_alpha(gen.generic_rational(gen.uniform(3, 7)));
    const AlphaVector b = scaled(a, mpq_class(7, 3));
    for (std::size_t j = 2; j <= a.size(); ++j) {
      const PairTally ta = tally_solutions(a, PairSelection(1, j));
      const PairTally tb = tally_solutions(b, PairSelection(1, j));
      EXPECT_EQ(ta.count, tb.count);
      EXPECT_EQ(ta.signed_count, tb.signed_count);
    }
  }
}

TEST(Invariants, DominantOutsideComponentEmptiesS) {
  oracle::Generator gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    oracle::Vec v = gen.generic_integers(gen.uniform(3, 6), 30);
    mpq_class total = 0;
    for (const auto& x : v) total += x;
    v.push_back(total + 1);
    const AlphaVector a = oracle::to_alpha(v);
    const std::size_t m = v.size();
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const PairTally t = tally_solutions(a, PairSelection(i, j));
        EXPECT_EQ(t.count, 0U);
        EXPECT_EQ(t.signed_count, 0);
      }
    }
  }
}

TEST(Invariants, PermutationMovesThePair) {
  const AlphaVector a = AlphaVector::from_integers({4, 6, 7, 9, 11});
  const AlphaVector b = AlphaVector::from_integers({11, 7, 4, 9, 6});
  EXPECT_EQ(signed_count(a, PairSelection(1, 2)), signed_count(b, PairSelection(3, 5)));
  EXPECT_EQ(solution_count(a, PairSelection(1, 2)), solution_count(b, PairSelection(3, 5)));
}

TEST(Invariants, ResultsDoNotDependOnThreadCount) {
  oracle::Generator gen(14);
  const AlphaVector a = oracle::to_alpha(gen.generic_integers(20, 1000000));
  std::vector<std::pair<std::uint64_t, std::int64_t>> serial;
  for (std::size_t j = 2; j <= 20; j += 3) {
    const PairTally t = tally_solutions(a, PairSelection(1, j));
    serial.emplace_back(t.count, t.signed_count);
  }
  Config cfg = config();
  cfg.threads = 4;
  ScopedConfig scoped(cfg);
  std::size_t k = 0;
  for (std::size_t j = 2; j <= 20; j += 3, ++k) {
    const PairTally t = tally_solutions(a, PairSelection(1, j));
    EXPECT_EQ(t.count, serial[k].first);
    EXPECT_EQ(t.signed_count, serial[k].second);
  }
}

TEST(Invariants, LogVectorAgreesWithRationalApproximation) {
  // log 2, log 3, log 5, log 7, log 11 orders its signed sums like these integers.
  const AlphaVector logs = parse_alpha("log:2,log:3,log:5,log:7,log:11");
  EXPECT_EQ(signed_count(logs, PairSelection(1, 2)), -1);
  EXPECT_EQ(closed_form_g(logs), -1);
  EXPECT_TRUE(verify_invariance(logs).ok());
}

TEST(WallCrossing, SingleWallExample) {
  const AlphaVector a = AlphaVector::from_integers({1, 2, 3});
  const WallCrossing w = wall_crossing_check(a, 3, PairSelection(1, 2), mpq_class(1, 2));
  ASSERT_EQ(w.wall_solutions.size(), 1U);
  EXPECT_EQ(w.jump_count, 1);
  EXPECT_EQ(w.jump_signed_count, 1);
  EXPECT_TRUE(w.matches());
}

TEST(WallCrossing, RejectsBadArguments) {
  const AlphaVector a = AlphaVector::from_integers({1, 2, 3});
  EXPECT_THROW(wall_crossing_check(a, 1, PairSelection(1, 2)), PreconditionError);
  EXPECT_THROW(wall_crossing_check(a, 3, PairSelection(1, 2), mpq_class(1)), PreconditionError);
  EXPECT_THROW(wall_crossing_check(parse_alpha("log:2,log:3,log:6"), 3, PairSelection(1, 2)), PreconditionError);
}
