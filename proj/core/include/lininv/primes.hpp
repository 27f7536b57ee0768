#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lininv/alpha_vector.hpp"

namespace lininv {

/// The first n primes, by a sieve of Eratosthenes.
std::vector<std::uint64_t> first_primes(std::size_t n);

/// alpha = (log p_1, ..., log p_n).
struct PrimeExample {
  std::size_t n;
  std::vector<std::uint64_t> primes;
  AlphaVector alpha;
};

/// Requires 3 <= n <= config().max_prime_n.
PrimeExample prime_alpha(std::size_t n);

/// (-1)^n times the sum of mu(k) over squarefree k coprime to p_i p_j with
/// all prime factors at most p_n and sqrt(P)/p_i < k < sqrt(P), where
/// P = p_1 ... p_n. Range tests compare k^2 p_i^2 and k^2 with P exactly.
std::int64_t mobius_sum(std::size_t n, std::size_t i, std::size_t j);

struct PrimePairRow {
  PairSelection pair;
  std::int64_t direct;
  std::int64_t moebius;

  bool agree() const { return direct == moebius; }
};

struct PrimeReport {
  std::size_t n = 0;
  bool generic = false;
  std::vector<PrimePairRow> rows;
  bool routes_agree = true;
  /// Odd n only.
  std::optional<bool> pair_independent;
  /// Even n only: the value depends on j alone.
  std::optional<bool> depends_only_on_j;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Both routes for every pair, plus the pair-dependence laws.
PrimeReport verify_prime_example(std::size_t n);

/// Both routes for a single pair.
PrimePairRow prime_pair(std::size_t n, PairSelection pair);

}  // namespace lininv
