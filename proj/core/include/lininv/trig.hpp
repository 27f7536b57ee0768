#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lininv/alpha_vector.hpp"
#include "lininv/exponential_sum.hpp"

namespace lininv {

/// r_i(t) = 1 - 2 d_i(t), d_i the i-th binary digit of t in [0,1).
/// Dyadic points take their terminating expansion, so r_i is constant on
/// each half-open interval [k/2^i, (k+1)/2^i).
int rademacher(std::size_t i, const mpq_class& t);

/// Integer vector beta and scale q with |beta_k/q - alpha_k| < bound/m,
/// where bound is the exact minimum of |<eps, alpha>| (rational vectors) or
/// a certified lower bound for it (log vectors).
struct BetaApproximation {
  std::vector<std::int64_t> beta;
  mpq_class q;
  mpq_class bound;
  std::size_t iterations = 0;
};

/// Doubling search q = 1, 2, 4, ... with beta_k = floor(q alpha_k + 1/2),
/// stopping at the first q for which check_beta_contract passes.
/// Requires a generic alpha.
BetaApproximation approximate_beta(const AlphaVector& alpha);

struct BetaContract {
  bool closeness = false;
  bool ordering = false;
  bool sign_preservation = false;
  std::string detail;  ///< first failure, empty when all hold

  bool ok() const { return closeness && ordering && sign_preservation; }
};

/// Verifies closeness, ordering/equality preservation and, exhaustively,
/// sgn<eps, beta> = sgn<eps, alpha> for every eps.
BetaContract check_beta_contract(const AlphaVector& alpha, const BetaApproximation& approx);

/// (1/2pi) PV integral of cot(x/2) sin(s x) over [0, 2pi].
int kernel_pairing(std::int64_t s);

enum class Formula {
  kResult,   ///< cot(x/2) prod sin(beta_k x)
  kResult1,  ///< cot(x/2) cos(beta_j x) prod_{k != j} sin(beta_k x)
  kResult2,  ///< cot(x/2) sin(beta_i x) prod_{k != i} cos(beta_k x)
};

Formula parse_formula(std::string_view name);
const char* to_string(Formula formula);

/// Trigonometric polynomial multiplying cot(x/2) in the formula, after
/// cot(b x) sin(b x) = cos(b x) and tan(b x) cos(b x) = sin(b x).
/// `index` is 1-based and ignored for kResult.
ExponentialSum integrand_expansion(Formula formula, std::span<const std::int64_t> beta, std::size_t index = 0);

/// The rational constant in front of (1/2pi) times the integral.
mpq_class formula_prefactor(Formula formula, std::size_t m);

/// (1/2pi) PV integral of the formula's integrand, no prefactor. Always real.
mpq_class bare_integral(Formula formula, std::span<const std::int64_t> beta, std::size_t index = 0);

/// prefactor * bare_integral for a generic beta, asserted to be an integer.
std::int64_t formula_value(Formula formula, std::span<const std::int64_t> beta, std::size_t index = 0);

/// Odd m >= 3. Equals N_{i,j}(alpha) for every pair when beta approximates
/// alpha. For generic beta the value is cross-checked against the two
/// pole-free Dirichlet-kernel forms of the same integral.
std::int64_t integral_N_odd(std::span<const std::int64_t> beta);
std::int64_t integral_N_odd(const BetaApproximation& approx);

/// Even m >= 4; `j` must not be the index of a strict minimum, so that some
/// i != j has beta_i <= beta_j. Equals N_{i,j} for those pairs.
std::int64_t integral_N_even(std::span<const std::int64_t> beta, std::size_t j);
std::int64_t integral_N_even(const BetaApproximation& approx, std::size_t j);

/// m >= 3; `i` must not be the index of a strict maximum. Equals #S_{i,j}
/// for every j with beta_j >= beta_i.
std::int64_t integral_count(std::span<const std::int64_t> beta, std::size_t i);
std::int64_t integral_count(const BetaApproximation& approx, std::size_t i);

struct QuadratureResult {
  double numeric = 0;
  mpq_class exact;
  bool agree = false;
};

/// Numerical value of prefactor * (1/2pi) * PV integral over [0, 2pi]:
/// adaptive Simpson with Richardson correction on [eta, 2pi - eta],
/// eta = 1e-4, and Gauss-Legendre on the two end windows, where the
/// integrand is bounded. Throws NumericalError when the adaptive budget
/// is exhausted.
QuadratureResult quadrature_check(Formula formula, std::span<const std::int64_t> beta, std::size_t index,
                                  double tolerance);

/// Numerical (1/2pi) PV integral of cot(x/2) sin(s x) (cosine = false) or
/// cot(x/2) cos(s x) (cosine = true) over [0, 2pi].
double numeric_kernel_pairing(std::int64_t s, bool cosine = false);

struct RademacherIdentityCheck {
  std::complex<double> lhs;
  std::complex<double> rhs;
  bool holds = false;
};

/// Compares the integral over [0,1] of r_1 ... r_k exp(i x sum beta_k r_k),
/// summed exactly over the 2^k dyadic intervals, with i^k prod sin(beta_k x).
/// Requires 1 <= k <= config().max_rademacher_length.
RademacherIdentityCheck rademacher_product_identity_check(std::span<const std::int64_t> beta, double x,
                                                          double tolerance = 1e-10);

}  // namespace lininv
