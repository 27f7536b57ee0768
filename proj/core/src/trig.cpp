#include "lininv/trig.hpp"

#include <cmath>
#include <string>

#include "lininv/config.hpp"
#include "lininv/errors.hpp"

namespace lininv {

namespace {

constexpr std::int64_t kMaxFrequencySum = std::int64_t{1} << 60;

void check_beta(std::span<const std::int64_t> beta, std::size_t min_length) {
  if (beta.size() < min_length) {
    throw PreconditionError("beta needs at least " + std::to_string(min_length) + " entries");
  }
  if (beta.size() > kMaxSignLength) throw PreconditionError("beta is too long");
  std::int64_t total = 0;
  for (std::int64_t b : beta) {
    if (b < 1) throw PreconditionError("beta entries must be positive integers");
    if (b >= kMaxFrequencySum || total >= kMaxFrequencySum - b) throw PreconditionError("beta entries too large");
    total += b;
  }
}

void check_index(std::span<const std::int64_t> beta, std::size_t index) {
  if (index < 1 || index > beta.size()) {
    throw PreconditionError("index " + std::to_string(index) + " outside [1," + std::to_string(beta.size()) + "]");
  }
}

AlphaVector as_alpha(std::span<const std::int64_t> beta) {
  std::vector<mpq_class> values;
  values.reserve(beta.size());
  for (std::int64_t b : beta) values.emplace_back(static_cast<long>(b));
  return AlphaVector::from_rationals(std::move(values));
}

std::int64_t to_integer(const mpq_class& value, const char* what) {
  if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
    throw InternalError(std::string(what) + " evaluated to the non-integer " + value.get_str());
  }
  return value.get_num().get_si();
}

mpq_class real_part(const std::pair<mpq_class, mpq_class>& z, const char* what) {
  if (sgn(z.second) != 0) throw InternalError(std::string(what) + " has a nonzero imaginary part");
  return z.first;
}

// The pole-free forms for the pair (m-1, m): the smaller of the two
// components enters as a Dirichlet kernel of order b-1 or b, the others as
// sines, with prefactor -i (2i)^{m-2}.
void check_dirichlet_forms(std::span<const std::int64_t> beta, std::int64_t expected) {
  const std::size_t m = beta.size();
  const std::size_t small = beta[m - 2] <= beta[m - 1] ? m - 2 : m - 1;
  ExponentialSum others;
  for (std::size_t k = 0; k < m; ++k) {
    if (k != small) others.times_sine(beta[k]);
  }
  // -i (2i)^{m-2} = -2^{m-2} i^{m-1}, real for odd m.
  mpq_class prefactor = mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(m - 2));
  prefactor *= ((m - 1) / 2) % 2 == 0 ? -1 : 1;
  const mpq_class first = prefactor * real_part(others.dirichlet_constant_term(beta[small] - 1), "Dirichlet form");
  const mpq_class second = prefactor * real_part(others.dirichlet_constant_term(beta[small]), "Dirichlet form");
  const mpq_class average = (first + second) / 2;
  if (first != expected || second != expected || average != expected) {
    throw InternalError("Dirichlet-kernel forms disagree with the cot-kernel value " + std::to_string(expected) +
                        ": " + first.get_str() + ", " + second.get_str());
  }
}

}  // namespace

int rademacher(std::size_t i, const mpq_class& t) {
  if (i < 1) throw PreconditionError("Rademacher index starts at 1");
  if (sgn(t) < 0 || t >= 1) throw PreconditionError("Rademacher argument must lie in [0,1)");
  mpz_class scaled = t.get_num() << static_cast<mp_bitcnt_t>(i);
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), t.get_den_mpz_t());
  return mpz_odd_p(scaled.get_mpz_t()) != 0 ? -1 : 1;
}

int kernel_pairing(std::int64_t s) { return (s > 0) - (s < 0); }

Formula parse_formula(std::string_view name) {
  if (name == "result") return Formula::kResult;
  if (name == "result1") return Formula::kResult1;
  if (name == "result2") return Formula::kResult2;
  throw ParseError("unknown formula '" + std::string(name) + "', expected result, result1 or result2");
}

const char* to_string(Formula formula) {
  switch (formula) {
    case Formula::kResult: return "result";
    case Formula::kResult1: return "result1";
    case Formula::kResult2: return "result2";
  }
  return "?";
}

ExponentialSum integrand_expansion(Formula formula, std::span<const std::int64_t> beta, std::size_t index) {
  check_beta(beta, 1);
  if (formula != Formula::kResult) check_index(beta, index);
  ExponentialSum out;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const bool special = k + 1 == index;
    switch (formula) {
      case Formula::kResult: out.times_sine(beta[k]); break;
      case Formula::kResult1: special ? out.times_cosine(beta[k]) : out.times_sine(beta[k]); break;
      case Formula::kResult2: special ? out.times_sine(beta[k]) : out.times_cosine(beta[k]); break;
    }
  }
  return out;
}

mpq_class formula_prefactor(Formula formula, std::size_t m) {
  if (m < 3) throw PreconditionError("formulas need m >= 3");
  mpq_class power(mpz_class(1) << static_cast<mp_bitcnt_t>(m - 2));
  switch (formula) {
    case Formula::kResult: return ((m + 1) / 2) % 2 == 0 ? power : mpq_class(-power);
    case Formula::kResult1: return (m / 2 - 1) % 2 == 0 ? power : mpq_class(-power);
    case Formula::kResult2: return power;
  }
  return power;
}

mpq_class bare_integral(Formula formula, std::span<const std::int64_t> beta, std::size_t index) {
  return real_part(integrand_expansion(formula, beta, index).cot_pairing(), "cot-kernel integral");
}

std::int64_t formula_value(Formula formula, std::span<const std::int64_t> beta, std::size_t index) {
  check_beta(beta, 3);
  require_generic(as_alpha(beta));
  return to_integer(formula_prefactor(formula, beta.size()) * bare_integral(formula, beta, index), to_string(formula));
}

std::int64_t integral_N_odd(std::span<const std::int64_t> beta) {
  check_beta(beta, 3);
  if (beta.size() % 2 == 0) throw PreconditionError("integral_N_odd needs odd m; use integral_N_even");
  const std::int64_t value = formula_value(Formula::kResult, beta);
  check_dirichlet_forms(beta, value);
  return value;
}

std::int64_t integral_N_even(std::span<const std::int64_t> beta, std::size_t j) {
  check_beta(beta, 4);
  if (beta.size() % 2 != 0) throw PreconditionError("integral_N_even needs even m; use integral_N_odd");
  check_index(beta, j);
  bool has_smaller = false;
  for (std::size_t k = 0; k < beta.size(); ++k) has_smaller = has_smaller || (k + 1 != j && beta[k] <= beta[j - 1]);
  if (!has_smaller) throw PreconditionError("index " + std::to_string(j) + " holds the strict minimum of beta");
  return formula_value(Formula::kResult1, beta, j);
}

std::int64_t integral_count(std::span<const std::int64_t> beta, std::size_t i) {
  check_beta(beta, 3);
  check_index(beta, i);
  bool has_larger = false;
  for (std::size_t k = 0; k < beta.size(); ++k) has_larger = has_larger || (k + 1 != i && beta[k] >= beta[i - 1]);
  if (!has_larger) throw PreconditionError("index " + std::to_string(i) + " holds the strict maximum of beta");
  return formula_value(Formula::kResult2, beta, i);
}

std::int64_t integral_N_odd(const BetaApproximation& approx) { return integral_N_odd(approx.beta); }

std::int64_t integral_N_even(const BetaApproximation& approx, std::size_t j) {
  return integral_N_even(approx.beta, j);
}

std::int64_t integral_count(const BetaApproximation& approx, std::size_t i) {
  return integral_count(approx.beta, i);
}

RademacherIdentityCheck rademacher_product_identity_check(std::span<const std::int64_t> beta, double x,
                                                          double tolerance) {
  const std::size_t k = beta.size();
  if (k < 1 || k > config().max_rademacher_length) {
    throw PreconditionError("Rademacher identity needs 1 <= k <= " + std::to_string(config().max_rademacher_length));
  }
  // On [J/2^k, (J+1)/2^k) the i-th digit is bit k-i of J.
  std::complex<double> total = 0;
  const std::uint64_t intervals = std::uint64_t{1} << k;
  for (std::uint64_t J = 0; J < intervals; ++J) {
    double phase = 0;
    int product = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      const int r = ((J >> (k - i)) & 1U) != 0 ? -1 : 1;
      product *= r;
      phase += static_cast<double>(r) * static_cast<double>(beta[i - 1]);
    }
    total += static_cast<double>(product) * std::polar(1.0, x * phase);
  }
  RademacherIdentityCheck out;
  out.lhs = total / static_cast<double>(intervals);

  std::complex<double> rhs = 1;
  for (std::size_t i = 0; i < k; ++i) rhs *= std::complex<double>(0, 1) * std::sin(static_cast<double>(beta[i]) * x);
  out.rhs = rhs;
  out.holds = std::abs(out.lhs - out.rhs) < tolerance;
  return out;
}

}  // namespace lininv
