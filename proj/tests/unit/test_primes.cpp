#include <gtest/gtest.h>

#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"
#include "lininv/primes.hpp"

using namespace lininv;

TEST(Primes, FirstPrimes) {
  EXPECT_EQ(first_primes(6), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}));
  EXPECT_EQ(first_primes(20).back(), 71U);
}

TEST(Primes, AlphaIsLogOfPrimes) {
  const PrimeExample ex = prime_alpha(5);
  EXPECT_TRUE(ex.alpha.is_log());
  EXPECT_EQ(ex.alpha.to_string(), "(log:2,log:3,log:5,log:7,log:11)");
  EXPECT_THROW(prime_alpha(2), PreconditionError);
  EXPECT_THROW(prime_alpha(21), PreconditionError);
}

TEST(Primes, SmallOddExamples) {
  for (const auto& [n, expected] : std::vector<std::pair<std::size_t, std::int64_t>>{{3, 1}, {5, -1}, {7, 3}, {9, -8}}) {
    const PrimeReport report = verify_prime_example(n);
    EXPECT_TRUE(report.ok()) << n;
    EXPECT_TRUE(report.generic);
    ASSERT_TRUE(report.pair_independent.has_value());
    EXPECT_TRUE(*report.pair_independent);
    EXPECT_EQ(report.rows.size(), n * (n - 1) / 2);
    for (const PrimePairRow& row : report.rows) {
      EXPECT_EQ(row.direct, expected) << n;
      EXPECT_EQ(row.moebius, expected) << n;
    }
  }
}

TEST(Primes, EvenExamplesDependOnLargerIndex) {
  for (std::size_t n : {4U, 6U, 8U}) {
    const PrimeReport report = verify_prime_example(n);
    EXPECT_TRUE(report.ok()) << n;
    ASSERT_TRUE(report.depends_only_on_j.has_value());
    EXPECT_TRUE(*report.depends_only_on_j);
  }
}

TEST(Primes, MobiusMatchesDirectForSinglePairs) {
  const PrimePairRow row = prime_pair(11, PairSelection(3, 8));
  EXPECT_EQ(row.direct, 22);
  EXPECT_TRUE(row.agree());
  EXPECT_EQ(mobius_sum(7, 2, 5), 3);
  EXPECT_THROW(mobius_sum(7, 5, 5), PreconditionError);
}
