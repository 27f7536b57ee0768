#pragma once

#include <cstddef>
#include <cstdint>

#include "lininv/alpha_vector.hpp"
#include "lininv/scalar.hpp"

namespace lininv {

enum class ShortenSign { kPlus, kMinus };

/// alpha with alpha_j replaced by |alpha_j +- alpha_k| and alpha_k deleted.
struct ShortenedVector {
  AlphaVector base;
  std::size_t replaced_index;  ///< j, 1-based in the original vector
  ShortenSign sign;
  std::size_t deleted_index;  ///< k, 1-based in the original vector

  /// 1-based position of the replaced component inside `base`.
  std::size_t replaced_position() const { return deleted_index < replaced_index ? replaced_index - 1 : replaced_index; }
};

/// Requires j != k, both in range, m >= 2, and alpha_j != alpha_k for kMinus.
/// The result is asserted generic whenever alpha is.
ShortenedVector shorten(const AlphaVector& alpha, std::size_t j, std::size_t k, ShortenSign sign);

/// The pair whose first member is the lowest-index occurrence of `first` and
/// whose second member is the lowest-index occurrence of `second` at another
/// position. Throws PreconditionError if either value is missing.
PairSelection pair_by_value(const AlphaVector& alpha, const Scalar& first, const Scalar& second);

/// Both sides of an identity between counts or signed counts.
struct IdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const { return lhs == rhs; }
};

/// #S_{a_i,a_j}(alpha) = #S_{a_i,|a_j-a_k|}(g-_{j,k}) + #S_{a_i,a_j+a_k}(g+_{j,k}).
/// Requires m >= 4, i,j,k distinct and alpha_k <= alpha_j - alpha_i.
IdentityCheck verify_count_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t k);

/// Even m >= 4, alpha_i <= alpha_j, k outside {i,j}:
///   N_{i,j}(alpha) = sgn(alpha_j - alpha_k) N(g-_{j,k}) - N(g+_{j,k}).
/// The g- term is dropped when alpha_j = alpha_k.
IdentityCheck verify_even_signed_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t k);

/// m >= 4, alpha_i <= alpha_j, r,s != i, r != s, alpha_r + alpha_s >= alpha_i,
/// |alpha_r - alpha_s| >= alpha_i and alpha_r != alpha_s:
///   #S_{a_i,a_j}(alpha) = #S_{a_i,|a_r-a_s|}(g-_{r,s}) + #S_{a_i,a_r+a_s}(g+_{r,s}).
IdentityCheck verify_pair_count_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t r,
                                      std::size_t s);

/// How the two shortened vectors enter the odd-length signed split.
///   kStated:  N(alpha) = N_{a_k,|a_i-a_j|}(g-_{i,j}) - N_{a_k,a_i+a_j}(g+_{i,j})
///   kSwapped: N(alpha) = N_{a_k,a_i+a_j}(g+_{i,j}) - N_{a_k,|a_i-a_j|}(g-_{i,j})
enum class SplitOrientation { kStated, kSwapped };

/// The orientation that holds on every tested instance.
inline constexpr SplitOrientation kResolvedOddSplitOrientation = SplitOrientation::kStated;

struct OddSplitCheck {
  bool equal_components = false;
  std::int64_t lhs = 0;
  std::int64_t stated_rhs = 0;
  /// Equals stated_rhs in the equal-components case, which has one form only.
  std::int64_t swapped_rhs = 0;

  bool stated_holds() const { return lhs == stated_rhs; }
  bool swapped_holds() const { return !equal_components && lhs == swapped_rhs; }
  bool holds() const {
    return kResolvedOddSplitOrientation == SplitOrientation::kStated ? stated_holds() : swapped_holds();
  }
};

/// Odd m >= 5, k outside {i,j}. If alpha_i != alpha_j, requires
/// alpha_k <= |alpha_i - alpha_j| and evaluates both orientations. If
/// alpha_i = alpha_j, requires alpha_k <= 2 alpha_i and evaluates
///   N(alpha) = -N_{a_k,2a_i}(g+_{i,j}) - 2 N(alpha_{i,j}).
OddSplitCheck verify_odd_signed_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t k);

const char* to_string(ShortenSign sign);
const char* to_string(SplitOrientation orientation);

}  // namespace lininv
