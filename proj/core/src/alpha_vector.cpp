#include "lininv/alpha_vector.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "lininv/config.hpp"
#include "lininv/detail/walk.hpp"
#include "lininv/errors.hpp"

namespace lininv {

namespace detail {

SignedSumKernel::SignedSumKernel(std::span<const Scalar> components)
    : size_(components.size()),
      realization_(components.empty() ? Realization::kRational : components.front().realization()) {
  if (realization_ == Realization::kLogRational) {
    numerators_.reserve(size_);
    denominators_.reserve(size_);
    for (const Scalar& c : components) {
      numerators_.push_back(c.payload().get_num());
      denominators_.push_back(c.payload().get_den());
    }
    return;
  }

  for (const Scalar& c : components) scale_ = lcm(scale_, mpz_class(c.payload().get_den()));
  weights_.reserve(size_);
  mpz_class total = 0;
  for (const Scalar& c : components) {
    weights_.push_back(c.payload().get_num() * (scale_ / c.payload().get_den()));
    total += weights_.back();
  }
  const mpz_class limit = mpz_class(1) << 62;
  if (total < limit) {
    fast_.reserve(size_);
    for (const mpz_class& w : weights_) fast_.push_back(w.get_si());
  }
}

int SignedSumKernel::sign(std::uint64_t mask) const {
  if (realization_ == Realization::kRational) {
    if (!fast_.empty()) {
      std::int64_t sum = 0;
      for (std::size_t k = 0; k < size_; ++k) sum += ((mask >> k) & 1U) != 0 ? -fast_[k] : fast_[k];
      return (sum > 0) - (sum < 0);
    }
    mpz_class sum = 0;
    for (std::size_t k = 0; k < size_; ++k) {
      if (((mask >> k) & 1U) != 0) {
        sum -= weights_[k];
      } else {
        sum += weights_[k];
      }
    }
    return sgn(sum);
  }
  // log(prod_{+} u / prod_{-} u) > 0  <=>  prod_{+} n * prod_{-} d > prod_{-} n * prod_{+} d
  mpz_class plus = 1;
  mpz_class minus = 1;
  for (std::size_t k = 0; k < size_; ++k) {
    if (((mask >> k) & 1U) != 0) {
      minus *= numerators_[k];
      plus *= denominators_[k];
    } else {
      plus *= numerators_[k];
      minus *= denominators_[k];
    }
  }
  return cmp(plus, minus) > 0 ? 1 : (cmp(plus, minus) < 0 ? -1 : 0);
}

mpq_class SignedSumKernel::signed_sum(std::uint64_t mask) const {
  if (realization_ != Realization::kRational) {
    throw PreconditionError("exact signed sums are only available for rational vectors");
  }
  mpz_class sum = 0;
  for (std::size_t k = 0; k < size_; ++k) {
    if (((mask >> k) & 1U) != 0) {
      sum -= weights_[k];
    } else {
      sum += weights_[k];
    }
  }
  mpq_class q(sum, scale_);
  q.canonicalize();
  return q;
}

}  // namespace detail

PairSelection::PairSelection(std::size_t a, std::size_t b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == 0 || b == 0) throw PreconditionError("pair indices are 1-based");
  if (a == b) throw PreconditionError("pair indices must differ, got " + std::to_string(a) + " twice");
}

void PairSelection::check_within(std::size_t m) const {
  if (j > m) {
    throw PreconditionError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for length " + std::to_string(m));
  }
}

AlphaVector::AlphaVector(std::vector<Scalar> components, std::vector<std::size_t> coordinate_map)
    : components_(std::move(components)), coordinate_map_(std::move(coordinate_map)) {
  if (components_.empty()) throw PreconditionError("alpha vector must not be empty");
  const std::size_t limit = std::min(config().max_m, kMaxSignLength);
  if (components_.size() > limit) {
    throw PreconditionError("alpha vector length " + std::to_string(components_.size()) +
                            " exceeds the configured maximum " + std::to_string(limit));
  }
  const Realization r = components_.front().realization();
  for (const Scalar& c : components_) {
    if (c.realization() != r) throw PreconditionError("alpha vector mixes rational and logarithmic components");
  }
  if (coordinate_map_.empty()) {
    coordinate_map_.resize(components_.size());
    std::iota(coordinate_map_.begin(), coordinate_map_.end(), std::size_t{1});
  } else if (coordinate_map_.size() != components_.size()) {
    throw PreconditionError("coordinate map length does not match alpha vector");
  }
  kernel_ = std::make_shared<const detail::SignedSumKernel>(components_);
}

AlphaVector AlphaVector::from_integers(std::initializer_list<long> values) {
  std::vector<Scalar> comps;
  comps.reserve(values.size());
  for (long v : values) comps.push_back(Scalar::rational(mpq_class(v)));
  return AlphaVector(std::move(comps));
}

AlphaVector AlphaVector::from_rationals(std::vector<mpq_class> values) {
  std::vector<Scalar> comps;
  comps.reserve(values.size());
  for (auto& v : values) comps.push_back(Scalar::rational(std::move(v)));
  return AlphaVector(std::move(comps));
}

AlphaVector AlphaVector::from_log_arguments(std::vector<mpq_class> arguments) {
  std::vector<Scalar> comps;
  comps.reserve(arguments.size());
  for (auto& v : arguments) comps.push_back(Scalar::log_of(std::move(v)));
  return AlphaVector(std::move(comps));
}

const Scalar& AlphaVector::at(std::size_t index) const {
  if (index == 0 || index > components_.size()) {
    throw PreconditionError("index " + std::to_string(index) + " out of range for length " +
                            std::to_string(components_.size()));
  }
  return components_[index - 1];
}

GenericityStatus AlphaVector::genericity_status() const {
  if (!genericity_) return GenericityStatus::kUnchecked;
  return genericity_->generic ? GenericityStatus::kGeneric : GenericityStatus::kDegenerate;
}

std::string AlphaVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k != 0) out += ',';
    out += components_[k].to_string();
  }
  out += ')';
  return out;
}

AlphaVector parse_alpha(std::string_view text) {
  std::vector<Scalar> comps;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    comps.push_back(parse_scalar(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  for (const Scalar& c : comps) {
    if (c.realization() != comps.front().realization()) {
      throw ParseError("vector mixes 'log:' and plain entries");
    }
  }
  return AlphaVector(std::move(comps));
}

int signed_sum_sign(const AlphaVector& alpha, const SignVector& eps) {
  if (eps.length() != alpha.size()) {
    throw PreconditionError("sign vector length " + std::to_string(eps.length()) +
                            " does not match alpha length " + std::to_string(alpha.size()));
  }
  return alpha.kernel().sign(eps.bits());
}

GenericityReport check_generic(const AlphaVector& alpha) {
  if (alpha.genericity_) return *alpha.genericity_;

  const std::size_t m = alpha.size();
  const auto& kernel = alpha.kernel();
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

  // Masks over coordinates 2..m; coordinate 1 stays +1.
  const unsigned bits = static_cast<unsigned>(m - 1);
  auto keep_min = [](std::uint64_t& into, std::uint64_t from) { into = std::min(into, from); };
  std::uint64_t zero_mask = kNone;
  if (kernel.has_fast_weights()) {
    const auto w = kernel.fast_weights();
    const std::int64_t lead = w[0];
    const auto rest = w.subspan(1);
    zero_mask = detail::fold_blocks<std::uint64_t>(
        bits,
        [&](std::uint64_t first, unsigned low) {
          std::uint64_t found = kNone;
          detail::gray_walk(rest, first, low, [&](std::uint64_t mask, std::int64_t sum) {
            if (sum + lead == 0) found = std::min(found, mask);
          });
          return found;
        },
        keep_min);
  } else {
    zero_mask = detail::fold_blocks<std::uint64_t>(
        bits,
        [&](std::uint64_t first, unsigned low) {
          const std::uint64_t count = std::uint64_t{1} << low;
          for (std::uint64_t t = 0; t < count; ++t) {
            if (kernel.sign((first + t) << 1) == 0) return first + t;
          }
          return kNone;
        },
        keep_min);
  }

  GenericityReport report;
  if (zero_mask != kNone) {
    report.generic = false;
    report.witness = SignVector(m, zero_mask << 1);
  }
  alpha.genericity_ = report;
  return report;
}

void require_generic(const AlphaVector& alpha) {
  const GenericityReport report = check_generic(alpha);
  if (!report.generic) {
    throw DegenerateError("vector " + alpha.to_string() + " is degenerate: signed sum vanishes at " +
                              report.witness->to_string(),
                          *report.witness);
  }
}

AlphaVector delete_pair(const AlphaVector& alpha, PairSelection pair) {
  if (alpha.size() < 3) throw PreconditionError("delete_pair needs at least 3 components");
  pair.check_within(alpha.size());
  std::vector<Scalar> comps;
  std::vector<std::size_t> map;
  for (std::size_t k = 1; k <= alpha.size(); ++k) {
    if (k == pair.i || k == pair.j) continue;
    comps.push_back(alpha.at(k));
    map.push_back(alpha.coordinate_map()[k - 1]);
  }
  return AlphaVector(std::move(comps), std::move(map));
}

AlphaVector scaled(const AlphaVector& alpha, const mpq_class& factor) {
  if (alpha.is_log()) throw PreconditionError("scaling is only defined for rational vectors");
  std::vector<Scalar> comps;
  for (const Scalar& c : alpha.components()) comps.push_back(Scalar::rational(c.payload() * factor));
  return AlphaVector(std::move(comps), alpha.coordinate_map());
}

AlphaVector with_component(const AlphaVector& alpha, std::size_t index, Scalar value) {
  (void)alpha.at(index);
  std::vector<Scalar> comps(alpha.components().begin(), alpha.components().end());
  comps[index - 1] = std::move(value);
  return AlphaVector(std::move(comps), alpha.coordinate_map());
}

}  // namespace lininv
