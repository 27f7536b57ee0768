#include "lininv/primes.hpp"

#include <cmath>
#include <map>
#include <string>

#include "lininv/config.hpp"
#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"

namespace lininv {

namespace {

void check_n(std::size_t n) {
  if (n < 3 || n > config().max_prime_n) {
    throw PreconditionError("prime example needs 3 <= n <= " + std::to_string(config().max_prime_n) + ", got " +
                            std::to_string(n));
  }
}

struct MobiusSearch {
  const std::vector<mpz_class>& allowed;
  mpz_class product;        // P
  mpz_class lower_factor;   // p_i^2
  std::int64_t total = 0;

  // k is squarefree; further factors come from allowed[next..].
  void visit(const mpz_class& k, std::size_t next, int mu) {
    const mpz_class square = k * k;
    if (square * lower_factor > product) total += mu;
    for (std::size_t t = next; t < allowed.size(); ++t) {
      const mpz_class extended = k * allowed[t];
      // allowed is ascending, so every later prime overshoots too.
      if (extended * extended >= product) break;
      visit(extended, t + 1, -mu);
    }
  }
};

}  // namespace

std::vector<std::uint64_t> first_primes(std::size_t n) {
  std::vector<std::uint64_t> out;
  if (n == 0) return out;
  // p_n < n (log n + log log n) for n >= 6.
  const double nn = static_cast<double>(std::max<std::size_t>(n, 6));
  std::size_t limit = static_cast<std::size_t>(nn * (std::log(nn) + std::log(std::log(nn)))) + 1;
  for (;;) {
    std::vector<bool> composite(limit + 1, false);
    out.clear();
    for (std::size_t p = 2; p <= limit && out.size() < n; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::size_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    if (out.size() == n) return out;
    limit *= 2;
  }
}

PrimeExample prime_alpha(std::size_t n) {
  check_n(n);
  std::vector<std::uint64_t> primes = first_primes(n);
  std::vector<mpq_class> args;
  args.reserve(n);
  for (std::uint64_t p : primes) args.emplace_back(static_cast<unsigned long>(p));
  return {n, std::move(primes), AlphaVector::from_log_arguments(std::move(args))};
}

std::int64_t mobius_sum(std::size_t n, std::size_t i, std::size_t j) {
  check_n(n);
  if (i == j) throw PreconditionError("mobius_sum needs i != j");
  if (i < 1 || j < 1 || i > n || j > n) throw PreconditionError("mobius_sum indices outside [1,n]");
  if (i > j) std::swap(i, j);

  const std::vector<std::uint64_t> primes = first_primes(n);
  std::vector<mpz_class> allowed;
  mpz_class product = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const mpz_class p(static_cast<unsigned long>(primes[k]));
    product *= p;
    if (k + 1 != i && k + 1 != j) allowed.push_back(p);
  }
  const mpz_class pi(static_cast<unsigned long>(primes[i - 1]));
  MobiusSearch search{allowed, product, pi * pi};
  search.visit(mpz_class(1), 0, 1);
  return n % 2 == 0 ? search.total : -search.total;
}

PrimePairRow prime_pair(std::size_t n, PairSelection pair) {
  const PrimeExample example = prime_alpha(n);
  pair.check_within(n);
  return {pair, signed_count(example.alpha, pair), mobius_sum(n, pair.i, pair.j)};
}

PrimeReport verify_prime_example(std::size_t n) {
  const PrimeExample example = prime_alpha(n);
  PrimeReport report;
  report.n = n;
  report.generic = check_generic(example.alpha).generic;
  if (!report.generic) {
    report.violations.push_back("prime vector reported degenerate");
    return report;
  }

  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      const PairSelection pair(i, j);
      PrimePairRow row{pair, signed_count(example.alpha, pair), mobius_sum(n, i, j)};
      if (!row.agree()) {
        report.routes_agree = false;
        report.violations.push_back("pair (" + std::to_string(i) + "," + std::to_string(j) + "): direct " +
                                    std::to_string(row.direct) + " vs Moebius " + std::to_string(row.moebius));
      }
      report.rows.push_back(row);
    }
  }

  if (n % 2 == 1) {
    bool same = true;
    for (const auto& row : report.rows) same = same && row.direct == report.rows.front().direct;
    report.pair_independent = same;
    if (!same) report.violations.push_back("N depends on the pair for odd n");
  } else {
    std::map<std::size_t, std::int64_t> by_j;
    bool only_j = true;
    for (const auto& row : report.rows) {
      auto [it, inserted] = by_j.try_emplace(row.pair.j, row.direct);
      if (!inserted && it->second != row.direct) only_j = false;
    }
    report.depends_only_on_j = only_j;
    if (!only_j) report.violations.push_back("N depends on i for even n");
  }
  return report;
}

}  // namespace lininv
