#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include <mpfr.h>

#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"
#include "lininv/trig.hpp"

namespace lininv {

namespace {

constexpr std::size_t kMaxDoublings = 200;
constexpr mpfr_prec_t kBasePrecision = 256;
constexpr mpfr_prec_t kMaxPrecision = 1 << 16;
const mpz_class kMaxEntry = mpz_class(1) << 56;

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

mpq_class to_rational(mpfr_srcptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// Rational bounds lo <= log(u) <= hi.
struct Interval {
  mpq_class lo;
  mpq_class hi;
};

Interval log_bracket(const mpq_class& u, mpfr_prec_t precision) {
  Mpfr num(precision), den(precision), a(precision), b(precision), lo(precision), hi(precision);
  // log(n/d) = log n - log d
  mpfr_set_z(num.get(), u.get_num_mpz_t(), MPFR_RNDD);
  mpfr_log(a.get(), num.get(), MPFR_RNDD);
  mpfr_set_z(den.get(), u.get_den_mpz_t(), MPFR_RNDU);
  mpfr_log(b.get(), den.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), a.get(), b.get(), MPFR_RNDD);

  mpfr_set_z(num.get(), u.get_num_mpz_t(), MPFR_RNDU);
  mpfr_log(a.get(), num.get(), MPFR_RNDU);
  mpfr_set_z(den.get(), u.get_den_mpz_t(), MPFR_RNDD);
  mpfr_log(b.get(), den.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.get(), b.get(), MPFR_RNDU);
  return {to_rational(lo.get()), to_rational(hi.get())};
}

std::vector<Interval> component_intervals(const AlphaVector& alpha, mpfr_prec_t precision) {
  std::vector<Interval> out;
  out.reserve(alpha.size());
  for (const Scalar& s : alpha.components()) {
    if (s.is_log()) out.push_back(log_bracket(s.payload(), precision));
    else out.push_back({s.payload(), s.payload()});
  }
  return out;
}

// Certified lower bound for min |<eps, alpha>| of a generic log vector, or
// nullopt when some signed-sum interval still straddles zero.
std::optional<mpq_class> log_min_bound(const AlphaVector& alpha, mpfr_prec_t precision) {
  const std::size_t m = alpha.size();
  std::deque<Mpfr> lo;
  std::deque<Mpfr> hi;
  for (const Scalar& s : alpha.components()) {
    Interval iv = log_bracket(s.payload(), precision);
    lo.emplace_back(precision);
    hi.emplace_back(precision);
    mpfr_set_q(lo.back().get(), iv.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.back().get(), iv.hi.get_mpq_t(), MPFR_RNDU);
  }
  Mpfr low(precision), high(precision), best(precision);
  mpfr_set_inf(best.get(), 1);
  // eps and -eps give the same |sum|.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    const std::uint64_t full = mask << 1;
    mpfr_set_zero(low.get(), 1);
    mpfr_set_zero(high.get(), 1);
    for (std::size_t k = 0; k < m; ++k) {
      if (((full >> k) & 1U) != 0) {
        mpfr_sub(low.get(), low.get(), hi[k].get(), MPFR_RNDD);
        mpfr_sub(high.get(), high.get(), lo[k].get(), MPFR_RNDU);
      } else {
        mpfr_add(low.get(), low.get(), lo[k].get(), MPFR_RNDD);
        mpfr_add(high.get(), high.get(), hi[k].get(), MPFR_RNDU);
      }
    }
    if (mpfr_sgn(low.get()) > 0) {
      if (mpfr_less_p(low.get(), best.get())) mpfr_set(best.get(), low.get(), MPFR_RNDD);
    } else if (mpfr_sgn(high.get()) < 0) {
      mpfr_neg(high.get(), high.get(), MPFR_RNDD);
      if (mpfr_less_p(high.get(), best.get())) mpfr_set(best.get(), high.get(), MPFR_RNDD);
    } else {
      return std::nullopt;
    }
  }
  return to_rational(best.get());
}

mpq_class min_abs_sum_bound(const AlphaVector& alpha) {
  if (!alpha.is_log()) return min_nonzero_signed_sum(alpha);
  for (mpfr_prec_t p = kBasePrecision; p <= kMaxPrecision; p *= 2) {
    if (auto bound = log_min_bound(alpha, p)) return *bound;
  }
  throw InternalError("could not separate the signed sums of " + alpha.to_string() + " from zero");
}

mpfr_prec_t precision_for(const mpq_class& q) {
  return kBasePrecision + 2 * static_cast<mpfr_prec_t>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
}

mpz_class nearest_integer(const mpq_class& x) {
  // floor(x + 1/2)
  const mpq_class shifted = x + mpq_class(1, 2);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

mpq_class abs_q(const mpq_class& x) { return sgn(x) < 0 ? mpq_class(-x) : x; }

}  // namespace

BetaContract check_beta_contract(const AlphaVector& alpha, const BetaApproximation& approx) {
  const std::size_t m = alpha.size();
  BetaContract out;
  if (approx.beta.size() != m) {
    out.detail = "beta has length " + std::to_string(approx.beta.size()) + ", alpha has length " + std::to_string(m);
    return out;
  }
  if (sgn(approx.q) <= 0) {
    out.detail = "q must be positive";
    return out;
  }

  const auto intervals = component_intervals(alpha, precision_for(approx.q));
  const mpq_class tolerance = approx.bound / static_cast<unsigned long>(m);
  out.closeness = true;
  for (std::size_t k = 0; k < m && out.closeness; ++k) {
    const mpq_class scaled = mpq_class(static_cast<long>(approx.beta[k])) / approx.q;
    const mpq_class err = std::max(abs_q(scaled - intervals[k].lo), abs_q(scaled - intervals[k].hi));
    if (!(err < tolerance)) {
      out.closeness = false;
      out.detail = "closeness fails at k=" + std::to_string(k + 1);
    }
  }

  out.ordering = true;
  for (std::size_t a = 0; a < m && out.ordering; ++a) {
    for (std::size_t b = a + 1; b < m && out.ordering; ++b) {
      const auto cmp = alpha[a] <=> alpha[b];
      const std::int64_t ba = approx.beta[a];
      const std::int64_t bb = approx.beta[b];
      const bool ok = cmp < 0 ? ba <= bb : cmp > 0 ? ba >= bb : ba == bb;
      if (!ok) {
        out.ordering = false;
        if (out.detail.empty()) out.detail = "ordering fails at (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
      }
    }
  }

  std::vector<mpq_class> as_rationals;
  for (std::int64_t b : approx.beta) {
    if (b <= 0) {
      if (out.detail.empty()) out.detail = "beta entries must be positive";
      return out;
    }
    as_rationals.emplace_back(static_cast<long>(b));
  }
  const AlphaVector beta = AlphaVector::from_rationals(std::move(as_rationals));
  out.sign_preservation = true;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    const std::uint64_t full = mask << 1;
    if (beta.kernel().sign(full) != alpha.kernel().sign(full)) {
      out.sign_preservation = false;
      if (out.detail.empty()) out.detail = "sign differs at " + SignVector(m, full).to_string();
      break;
    }
  }
  return out;
}

BetaApproximation approximate_beta(const AlphaVector& alpha) {
  require_generic(alpha);
  const mpq_class bound = min_abs_sum_bound(alpha);
  const std::size_t m = alpha.size();

  mpq_class q = 1;
  for (std::size_t iteration = 0; iteration < kMaxDoublings; ++iteration, q *= 2) {
    const auto intervals = component_intervals(alpha, precision_for(q));
    BetaApproximation candidate{{}, q, bound, iteration + 1};
    bool positive = true;
    for (std::size_t k = 0; k < m; ++k) {
      const mpz_class b = nearest_integer(q * intervals[k].lo);
      if (b > kMaxEntry) {
        throw InternalError("beta entries for " + alpha.to_string() + " exceed 2^56 before the contract holds");
      }
      positive = positive && b >= 1;
      candidate.beta.push_back(b.get_si());
    }
    if (!positive) continue;
    if (check_beta_contract(alpha, candidate).ok()) return candidate;
  }
  throw InternalError("no beta approximation for " + alpha.to_string() + " within " + std::to_string(kMaxDoublings) +
                      " doublings (bound " + bound.get_str() + ")");
}

}  // namespace lininv
