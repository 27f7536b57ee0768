#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace lininv {

/// A trigonometric polynomial
///   scale * i^ipower * sum_s c_s e^{i s x}
/// with integer frequencies s, integer coefficients c_s and rational scale.
///
/// Products of sines and cosines of integer frequencies stay in this form:
/// every factor halves the scale, a sine also lowers the power of i by one.
class ExponentialSum {
 public:
  /// The constant function 1.
  ExponentialSum();

  static ExponentialSum one() { return {}; }

  ExponentialSum& times_sine(std::int64_t beta);
  ExponentialSum& times_cosine(std::int64_t beta);
  /// Multiplies by the Dirichlet kernel sum_{|k| <= n} e^{ikx}.
  ExponentialSum& times_dirichlet(std::int64_t n);

  const std::map<std::int64_t, std::int64_t>& coefficients() const { return coefficients_; }
  const mpq_class& scale() const { return scale_; }
  int ipower() const { return ipower_; }

  /// (1/2pi) * integral over [0, 2pi]: scale * i^ipower * c_0, as (re, im).
  std::pair<mpq_class, mpq_class> constant_term() const;

  /// Constant term of this sum times the Dirichlet kernel of order n,
  /// without forming the product.
  std::pair<mpq_class, mpq_class> dirichlet_constant_term(std::int64_t n) const;

  /// Principal value (1/2pi) * integral of cot(x/2) times this sum over
  /// [0, 2pi], using cot(x/2) e^{isx} -> i sgn(s). Returns (re, im).
  std::pair<mpq_class, mpq_class> cot_pairing() const;

  /// True when the coefficients describe a real function:
  /// conj(i^p c_s) = i^p c_{-s} for all s.
  bool conjugate_symmetric() const;

  std::string to_string() const;

 private:
  std::pair<mpq_class, mpq_class> rotate(const mpz_class& value, int extra_power) const;

  std::map<std::int64_t, std::int64_t> coefficients_;
  mpq_class scale_{1};
  int ipower_ = 0;
};

}  // namespace lininv
