#include <gtest/gtest.h>

#include <cmath>

#include "lininv/errors.hpp"
#include "lininv/exponential_sum.hpp"
#include "lininv/invariants.hpp"
#include "lininv/primes.hpp"
#include "lininv/trig.hpp"
#include "oracle.hpp"

using namespace lininv;

namespace {

std::vector<std::int64_t> to_integers(const oracle::Vec& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(x.get_num().get_si());
  return out;
}

}  // namespace

TEST(Rademacher, Digits) {
  EXPECT_EQ(rademacher(1, mpq_class(0)), 1);
  EXPECT_EQ(rademacher(1, mpq_class(1, 4)), 1);
  EXPECT_EQ(rademacher(2, mpq_class(1, 4)), -1);
  EXPECT_EQ(rademacher(1, mpq_class(1, 2)), -1);
  EXPECT_EQ(rademacher(2, mpq_class(1, 2)), 1);
  EXPECT_EQ(rademacher(3, mpq_class(5, 8)), -1);
  EXPECT_EQ(rademacher(2, mpq_class(1, 3)), -1);
  EXPECT_THROW(rademacher(0, mpq_class(1, 2)), PreconditionError);
  EXPECT_THROW(rademacher(1, mpq_class(1)), PreconditionError);
}

TEST(Rademacher, ProductIdentity) {
  for (double x : {0.3, 1.1, 2.7}) {
    const std::vector<std::int64_t> beta = {1, 2, 3, 5};
    const RademacherIdentityCheck c = rademacher_product_identity_check(beta, x);
    EXPECT_TRUE(c.holds) << x;
    std::complex<double> expected = 1;
    for (std::int64_t b : beta) expected *= std::complex<double>(0, std::sin(static_cast<double>(b) * x));
    EXPECT_NEAR(std::abs(c.rhs - expected), 0, 1e-12);
  }
}

TEST(Kernel, SignOfFrequency) {
  EXPECT_EQ(kernel_pairing(5), 1);
  EXPECT_EQ(kernel_pairing(-3), -1);
  EXPECT_EQ(kernel_pairing(0), 0);
  for (std::int64_t s : {-7, -1, 1, 4, 13}) {
    EXPECT_NEAR(numeric_kernel_pairing(s), kernel_pairing(s), 1e-8) << s;
    EXPECT_NEAR(numeric_kernel_pairing(s, true), 0, 1e-8) << s;
  }
}

TEST(ExponentialSum, ConstantTerms) {
  ExponentialSum sq;
  sq.times_sine(3).times_sine(3);
  EXPECT_EQ(sq.constant_term().first, mpq_class(1, 2));
  EXPECT_EQ(sq.constant_term().second, 0);
  ExponentialSum c;
  c.times_cosine(2).times_cosine(5);
  EXPECT_EQ(c.constant_term().first, 0);
  ExponentialSum s;
  s.times_sine(5);
  EXPECT_EQ(s.cot_pairing().first, 1);
  EXPECT_TRUE(s.conjugate_symmetric());
}

TEST(Integrals, PublishedExamples) {
  const std::vector<std::int64_t> intro = {4, 6, 7, 9, 11};
  EXPECT_EQ(integral_N_odd(intro), -2);
  EXPECT_EQ(integral_count(intro, 1), 2);
  const std::vector<std::int64_t> even = {2, 3, 4, 8};
  EXPECT_EQ(integral_N_even(even, 4), 1);
  EXPECT_EQ(integral_N_even(even, 3), -1);
  EXPECT_EQ(formula_value(Formula::kResult, even), 0);
}

TEST(Integrals, Preconditions) {
  EXPECT_THROW(integral_N_odd(std::vector<std::int64_t>{2, 3, 4, 8}), PreconditionError);
  EXPECT_THROW(integral_N_odd(std::vector<std::int64_t>{1, 2, 3}), DegenerateError);
  EXPECT_THROW(integral_N_even(std::vector<std::int64_t>{2, 3, 4, 8}, 1), PreconditionError);
  EXPECT_THROW(integral_count(std::vector<std::int64_t>{4, 6, 7, 9, 11}, 5), PreconditionError);
  EXPECT_THROW(integral_count(std::vector<std::int64_t>{4, 0, 7}, 1), PreconditionError);
  EXPECT_THROW(formula_value(Formula::kResult, std::vector<std::int64_t>{1, 2, 3, 5, 7}), DegenerateError);
  EXPECT_THROW(parse_formula("result3"), ParseError);
}

TEST(Integrals, MatchEnumerationOnRandomVectors) {
  oracle::Generator gen(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = gen.uniform(3, 7);
    const oracle::Vec v = gen.generic_integers(m, 25);
    const std::vector<std::int64_t> beta = to_integers(v);
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = i + 1; j <= m; ++j) {
        const oracle::Counts c = oracle::brute_force(v, i, j);
        const std::size_t lo = v[i - 1] <= v[j - 1] ? i : j;
        const std::size_t hi = lo == i ? j : i;
        EXPECT_EQ(integral_count(beta, lo), c.count);
        if (m % 2 == 1) EXPECT_EQ(integral_N_odd(beta), c.signed_count);
        else EXPECT_EQ(integral_N_even(beta, hi), c.signed_count);
      }
    }
  }
}

TEST(Quadrature, AgreesWithExactValues) {
  const std::vector<std::int64_t> intro = {4, 6, 7, 9, 11};
  EXPECT_TRUE(quadrature_check(Formula::kResult, intro, 0, 1e-8).agree);
  EXPECT_TRUE(quadrature_check(Formula::kResult2, intro, 1, 1e-8).agree);
  const std::vector<std::int64_t> even = {2, 3, 4, 8};
  const QuadratureResult r = quadrature_check(Formula::kResult, even, 0, 1e-8);
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.exact, 0);
  EXPECT_TRUE(quadrature_check(Formula::kResult1, even, 4, 1e-8).agree);
  EXPECT_THROW(quadrature_check(Formula::kResult, intro, 0, 0), PreconditionError);
}

TEST(BetaApproximation, RationalVector) {
  const AlphaVector a = AlphaVector::from_rationals({mpq_class(1, 2), mpq_class(3, 2), mpq_class(5, 2)});
  const BetaApproximation b = approximate_beta(a);
  EXPECT_EQ(b.q, 2);
  EXPECT_EQ(b.beta, (std::vector<std::int64_t>{1, 3, 5}));
  EXPECT_TRUE(check_beta_contract(a, b).ok());
}

TEST(BetaApproximation, LogVector) {
  const AlphaVector a = prime_alpha(5).alpha;
  const BetaApproximation b = approximate_beta(a);
  EXPECT_TRUE(check_beta_contract(a, b).ok());
  EXPECT_EQ(integral_N_odd(b), signed_count(a, PairSelection(1, 2)));
}

TEST(BetaApproximation, ContractDetectsBadCandidates) {
  const AlphaVector a = AlphaVector::from_integers({4, 6, 7, 9, 11});
  BetaApproximation b = approximate_beta(a);
  b.beta[0] += 5;
  const BetaContract c = check_beta_contract(a, b);
  EXPECT_FALSE(c.ok());
  EXPECT_FALSE(c.detail.empty());
  EXPECT_THROW(approximate_beta(AlphaVector::from_integers({1, 2, 3})), DegenerateError);
}
