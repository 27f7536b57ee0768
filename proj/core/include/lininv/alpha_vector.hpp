#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lininv/detail/kernel.hpp"
#include "lininv/errors.hpp"
#include "lininv/scalar.hpp"
#include "lininv/sign_vector.hpp"

namespace lininv {

/// Thrown by require_generic and by operations that need genericity.
class DegenerateError : public PreconditionError {
 public:
  DegenerateError(const std::string& what, SignVector witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const SignVector& witness() const { return witness_; }

 private:
  SignVector witness_;
};

/// A pair of distinct 1-based indices, stored with i < j.
struct PairSelection {
  PairSelection(std::size_t a, std::size_t b);

  std::size_t i;
  std::size_t j;

  /// Throws PreconditionError if j > m.
  void check_within(std::size_t m) const;

  friend bool operator==(const PairSelection&, const PairSelection&) = default;
  friend auto operator<=>(const PairSelection&, const PairSelection&) = default;
};

enum class GenericityStatus { kUnchecked, kGeneric, kDegenerate };

struct GenericityReport {
  bool generic = true;
  /// Present iff !generic; satisfies <witness, alpha> == 0 exactly.
  std::optional<SignVector> witness;
};

/// An ordered list of positive Scalars sharing one realization.
///
/// Vectors produced by delete_pair remember the 1-based index each component
/// had in the vector they came from. Genericity is computed on first request
/// and cached; the cache is not synchronized, so the first call must not race.
class AlphaVector {
 public:
  explicit AlphaVector(std::vector<Scalar> components, std::vector<std::size_t> coordinate_map = {});

  static AlphaVector from_integers(std::initializer_list<long> values);
  static AlphaVector from_rationals(std::vector<mpq_class> values);
  static AlphaVector from_log_arguments(std::vector<mpq_class> arguments);

  std::size_t size() const { return components_.size(); }
  Realization realization() const { return components_.front().realization(); }
  bool is_log() const { return realization() == Realization::kLogRational; }

  std::span<const Scalar> components() const { return components_; }
  const Scalar& operator[](std::size_t k) const { return components_[k]; }
  /// 1-based access with bounds checking.
  const Scalar& at(std::size_t index) const;

  const std::vector<std::size_t>& coordinate_map() const { return coordinate_map_; }

  GenericityStatus genericity_status() const;

  /// "(4,6,7,9,11)"
  std::string to_string() const;

  const detail::SignedSumKernel& kernel() const { return *kernel_; }

  friend bool operator==(const AlphaVector& a, const AlphaVector& b) {
    return a.components_ == b.components_;
  }

 private:
  friend GenericityReport check_generic(const AlphaVector& alpha);

  std::vector<Scalar> components_;
  std::vector<std::size_t> coordinate_map_;
  std::shared_ptr<const detail::SignedSumKernel> kernel_;
  mutable std::optional<GenericityReport> genericity_;
};

/// Comma-separated scalar list; mixing "log:" and plain entries is rejected.
AlphaVector parse_alpha(std::string_view text);

/// Exact sign of <eps, alpha>. Throws PreconditionError on length mismatch.
int signed_sum_sign(const AlphaVector& alpha, const SignVector& eps);

/// Exhaustive over eps with eps_1 = +1 (each eps and -eps counted once).
/// The reported witness is the smallest such mask with a zero sum.
GenericityReport check_generic(const AlphaVector& alpha);

/// Throws DegenerateError carrying the witness when alpha is not generic.
void require_generic(const AlphaVector& alpha);

/// alpha with components i and j removed. Requires m >= 3.
AlphaVector delete_pair(const AlphaVector& alpha, PairSelection pair);

/// c * alpha, rational vectors only.
AlphaVector scaled(const AlphaVector& alpha, const mpq_class& factor);

/// alpha with the component at 1-based `index` replaced.
AlphaVector with_component(const AlphaVector& alpha, std::size_t index, Scalar value);

}  // namespace lininv
