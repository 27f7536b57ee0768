#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lininv {

enum class Realization { kRational, kLogRational };

/// An exact positive quantity.
///
/// Either a positive rational, or the natural logarithm of a rational
/// argument greater than one. Sums and differences stay inside the
/// realization: for logarithms they become products and quotients of the
/// arguments, so every comparison reduces to big-integer arithmetic.
class Scalar {
 public:
  /// Throws PreconditionError unless value > 0.
  static Scalar rational(mpq_class value);
  /// log(argument); throws PreconditionError unless argument > 1.
  static Scalar log_of(mpq_class argument);

  Realization realization() const { return realization_; }
  bool is_log() const { return realization_ == Realization::kLogRational; }

  /// The rational value, or the argument of the logarithm.
  const mpq_class& payload() const { return payload_; }

  double approximate() const;

  /// "7/2", "4" or "log:7/2". Round-trips through parse_scalar.
  std::string to_string() const;

  /// Both operands must share a realization (PreconditionError otherwise).
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  /// |a - b|; throws PreconditionError when a == b.
  friend Scalar abs_diff(const Scalar& a, const Scalar& b);

  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Scalar(Realization r, mpq_class payload) : realization_(r), payload_(std::move(payload)) {}

  Realization realization_;
  mpq_class payload_;
};

/// Accepts "4", "6.25", "7/2", "log:3", "log:7/2", "log:1.5".
Scalar parse_scalar(std::string_view text);

/// Exact decimal or fraction literal, no sign allowed.
mpq_class parse_rational(std::string_view text);

std::string rational_to_string(const mpq_class& q);

}  // namespace lininv
