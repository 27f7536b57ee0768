#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lininv/alpha_vector.hpp"
#include "lininv/scalar.hpp"
#include "lininv/sign_vector.hpp"

namespace lininv {

/// S_{i,j}(alpha): sign vectors eps on the pair-deleted coordinates with
///   |alpha_i - alpha_j| < <eps, alpha_{i,j}> < alpha_i + alpha_j,
/// sorted by ascending mask. Each SignVector carries the original indices.
struct SolutionSet {
  PairSelection pair;
  std::vector<SignVector> solutions;
};

/// One streaming pass over S_{i,j}: its size and its signed count
/// N_{i,j} = sum over S of prod_k eps_k.
struct PairTally {
  std::uint64_t count = 0;
  std::int64_t signed_count = 0;

  int parity() const { return static_cast<int>(count & 1U); }
};

struct PairRow {
  PairSelection pair;
  std::uint64_t count;
  int parity;
  std::int64_t signed_count;
};

struct InvariantReport {
  std::vector<PairRow> rows;  ///< all m(m-1)/2 pairs, lexicographic
  bool parity_invariant = true;
  /// Odd m only.
  std::optional<bool> signed_count_invariant;
  /// Even m only: N as a function of max(alpha_i, alpha_j).
  std::optional<bool> signed_count_depends_on_max_only;
  std::map<Scalar, std::int64_t> signed_count_by_max_omitted;
  /// All m: #S as a function of min(alpha_i, alpha_j).
  bool count_depends_on_min_only = true;
  std::map<Scalar, std::uint64_t> count_by_min_omitted;
  /// Human-readable description of every violated law. Empty unless buggy.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// `i` indexes the smaller component, `j` the larger; equal values keep
/// the lower index as `i`.
struct OrientedPair {
  std::size_t i;
  std::size_t j;
};
OrientedPair orient_by_value(const AlphaVector& alpha, PairSelection pair);

SolutionSet enumerate_solutions(const AlphaVector& alpha, PairSelection pair);

PairTally tally_solutions(const AlphaVector& alpha, PairSelection pair);

std::int64_t signed_count(const AlphaVector& alpha, PairSelection pair);
std::uint64_t solution_count(const AlphaVector& alpha, PairSelection pair);
int parity(const AlphaVector& alpha, PairSelection pair);

/// Sum over S_{i,j} of eps_{h'} * prod_k eps_k, where h' is the coordinate of
/// alpha_{i,j} holding alpha_h. Requires m >= 4 and h outside the pair.
std::int64_t extended_signed_count(const AlphaVector& alpha, PairSelection pair, std::size_t h);

/// g(alpha) = -1/4 * sum over all eps in {+-1}^m of sgn<eps,alpha> prod eps_k.
/// Equals N_{i,j} for every pair when m is odd and vanishes for even m.
std::int64_t closed_form_g(const AlphaVector& alpha);

/// #S_{i,j} = 1/2 * sum over eps with eps_i = +1 of sgn<eps,alpha>, where
/// i is the smaller component of the pair.
std::int64_t count_via_sign_sum(const AlphaVector& alpha, PairSelection pair);

/// Even m: N_{i,j} = 1/4 * sum over eps of eps_j sgn<eps,alpha> prod eps_k,
/// with j the larger component of the pair.
std::int64_t signed_count_even_via_sign_sum(const AlphaVector& alpha, PairSelection pair);

InvariantReport verify_invariance(const AlphaVector& alpha);

/// Outcome of moving alpha_l across a wall.
struct WallCrossing {
  mpq_class delta;
  /// Zero-sum sign vectors of the wall vector, one per {eps, -eps} class
  /// (the representative has eps_1 = +1).
  std::vector<SignVector> wall_solutions;
  std::int64_t jump_signed_count = 0;  ///< N(alpha - delta e_l) - N(alpha + delta e_l)
  std::int64_t jump_count = 0;         ///< #S(alpha - delta e_l) - #S(alpha + delta e_l)
  std::int64_t predicted_signed_count = 0;
  std::int64_t predicted_count = 0;

  bool matches() const {
    return jump_signed_count == predicted_signed_count && jump_count == predicted_count;
  }
};

/// Smallest nonzero |<eps, alpha>| over all eps. Rational vectors only.
mpq_class min_nonzero_signed_sum(const AlphaVector& alpha);

/// Compares the jumps of N_{pair} and #S_{pair} across alpha_l = const with
/// the wall-crossing prediction
///   #S^- - #S^+ = -sum_r eps_i(r) eps_l(r),
///   N^-  - N^+  = -sum_r eps_i(r) eps_l(r) prod_{k != i,j} (-eps_j(r) eps_k(r)),
/// i being the smaller pair component. For odd m the second sum is also
/// checked against +sum_r eps_l(r) prod_k eps_k(r).
///
/// Rational vectors only; l must lie outside the pair; `delta` defaults to a
/// quarter of min_nonzero_signed_sum and must be below half of it.
WallCrossing wall_crossing_check(const AlphaVector& on_wall, std::size_t l, PairSelection pair,
                                 std::optional<mpq_class> delta = std::nullopt);

}  // namespace lininv
