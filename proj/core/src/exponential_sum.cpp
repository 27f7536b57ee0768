#include "lininv/exponential_sum.hpp"

#include <sstream>

#include "lininv/errors.hpp"

namespace lininv {

namespace {

constexpr std::int64_t kFrequencyLimit = std::int64_t{1} << 61;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("exponential sum coefficient overflow");
  return out;
}

void check_frequency(std::int64_t beta) {
  if (beta < 0 || beta >= kFrequencyLimit) throw PreconditionError("frequency out of range");
}

void accumulate(std::map<std::int64_t, std::int64_t>& into, std::int64_t s, std::int64_t c) {
  if (s <= -kFrequencyLimit || s >= kFrequencyLimit) throw PreconditionError("frequency out of range");
  auto [it, inserted] = into.try_emplace(s, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) into.erase(it);
  } else if (c == 0) {
    into.erase(it);
  }
}

}  // namespace

ExponentialSum::ExponentialSum() { coefficients_[0] = 1; }

ExponentialSum& ExponentialSum::times_sine(std::int64_t beta) {
  // sin(bx) = (e^{ibx} - e^{-ibx}) / (2i)
  check_frequency(beta);
  std::map<std::int64_t, std::int64_t> next;
  for (const auto& [s, c] : coefficients_) {
    accumulate(next, s + beta, c);
    accumulate(next, s - beta, -c);
  }
  coefficients_ = std::move(next);
  scale_ /= 2;
  ipower_ = (ipower_ + 3) % 4;
  return *this;
}

ExponentialSum& ExponentialSum::times_cosine(std::int64_t beta) {
  check_frequency(beta);
  std::map<std::int64_t, std::int64_t> next;
  for (const auto& [s, c] : coefficients_) {
    accumulate(next, s + beta, c);
    accumulate(next, s - beta, c);
  }
  coefficients_ = std::move(next);
  scale_ /= 2;
  return *this;
}

ExponentialSum& ExponentialSum::times_dirichlet(std::int64_t n) {
  check_frequency(n);
  std::map<std::int64_t, std::int64_t> next;
  for (const auto& [s, c] : coefficients_) {
    for (std::int64_t k = -n; k <= n; ++k) accumulate(next, s + k, c);
  }
  coefficients_ = std::move(next);
  return *this;
}

std::pair<mpq_class, mpq_class> ExponentialSum::rotate(const mpz_class& value, int extra_power) const {
  const mpq_class v = scale_ * mpq_class(value);
  switch ((ipower_ + extra_power) % 4) {
    case 0: return {v, 0};
    case 1: return {0, v};
    case 2: return {-v, 0};
    default: return {0, -v};
  }
}

std::pair<mpq_class, mpq_class> ExponentialSum::constant_term() const {
  auto it = coefficients_.find(0);
  const mpz_class c0 = it == coefficients_.end() ? mpz_class(0) : mpz_class(static_cast<long>(it->second));
  return rotate(c0, 0);
}

std::pair<mpq_class, mpq_class> ExponentialSum::dirichlet_constant_term(std::int64_t n) const {
  check_frequency(n);
  mpz_class total = 0;
  for (auto it = coefficients_.lower_bound(-n); it != coefficients_.end() && it->first <= n; ++it) {
    total += static_cast<long>(it->second);
  }
  return rotate(total, 0);
}

std::pair<mpq_class, mpq_class> ExponentialSum::cot_pairing() const {
  mpz_class total = 0;
  for (const auto& [s, c] : coefficients_) {
    if (s > 0) total += static_cast<long>(c);
    else if (s < 0) total -= static_cast<long>(c);
  }
  return rotate(total, 1);
}

bool ExponentialSum::conjugate_symmetric() const {
  // i^p c_s real-conjugates to (-1)^p i^p c_s, so c_{-s} = (-1)^p c_s.
  const std::int64_t flip = ipower_ % 2 == 0 ? 1 : -1;
  for (const auto& [s, c] : coefficients_) {
    auto it = coefficients_.find(-s);
    const std::int64_t mirror = it == coefficients_.end() ? 0 : it->second;
    if (mirror != flip * c) return false;
  }
  return true;
}

std::string ExponentialSum::to_string() const {
  std::ostringstream out;
  out << scale_.get_str() << " * i^" << ipower_ << " * [";
  bool first = true;
  for (const auto& [s, c] : coefficients_) {
    if (!first) out << ", ";
    first = false;
    out << s << ":" << c;
  }
  out << "]";
  return out.str();
}

}  // namespace lininv
