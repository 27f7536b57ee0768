#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "lininv/scalar.hpp"

namespace lininv::detail {

/// Exact sign evaluation of signed sums <eps, alpha>.
///
/// Rational vectors are cleared of denominators once, giving integer weights
/// with the same signed-sum signs. When the absolute weights sum to less than
/// 2^62 every partial sum fits in an int64 and the Gray-code walks use the
/// fast weights. Log vectors compare the two products of arguments.
class SignedSumKernel {
 public:
  explicit SignedSumKernel(std::span<const Scalar> components);

  std::size_t size() const { return size_; }
  Realization realization() const { return realization_; }

  bool has_fast_weights() const { return !fast_.empty() || size_ == 0; }
  std::span<const std::int64_t> fast_weights() const { return fast_; }

  /// Rational mode only: alpha_k == integer_weights()[k] / scale().
  const std::vector<mpz_class>& integer_weights() const { return weights_; }
  const mpz_class& scale() const { return scale_; }

  /// Sign of <eps, alpha> for the full-length vector encoded by `mask`.
  int sign(std::uint64_t mask) const;

  /// Rational mode only: the exact signed sum.
  mpq_class signed_sum(std::uint64_t mask) const;

 private:
  std::size_t size_;
  Realization realization_;
  std::vector<mpz_class> weights_;
  mpz_class scale_{1};
  std::vector<std::int64_t> fast_;
  std::vector<mpz_class> numerators_;
  std::vector<mpz_class> denominators_;
};

}  // namespace lininv::detail
