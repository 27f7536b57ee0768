#include "lininv/scalar.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "lininv/errors.hpp"

namespace lininv {

namespace {

constexpr std::string_view kLogPrefix = "log:";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_natural(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw ParseError("malformed number '" + std::string(whole) + "'");
  return mpz_class(std::string(s), 10);
}

void require_same(const Scalar& a, const Scalar& b) {
  if (a.realization() != b.realization()) {
    throw PreconditionError("cannot combine rational and logarithmic scalars");
  }
}

}  // namespace

Scalar Scalar::rational(mpq_class value) {
  value.canonicalize();
  if (sgn(value) <= 0) throw PreconditionError("scalar must be positive, got " + value.get_str());
  return Scalar(Realization::kRational, std::move(value));
}

Scalar Scalar::log_of(mpq_class argument) {
  argument.canonicalize();
  if (argument <= 1) {
    throw PreconditionError("log argument must exceed 1, got " + argument.get_str());
  }
  return Scalar(Realization::kLogRational, std::move(argument));
}

double Scalar::approximate() const {
  const double v = payload_.get_d();
  return is_log() ? std::log(v) : v;
}

std::string Scalar::to_string() const {
  const std::string body = rational_to_string(payload_);
  return is_log() ? std::string(kLogPrefix) + body : body;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.is_log()) return Scalar::log_of(a.payload_ * b.payload_);
  return Scalar::rational(a.payload_ + b.payload_);
}

Scalar abs_diff(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a == b) throw PreconditionError("|a - b| vanishes for equal scalars " + a.to_string());
  const bool a_big = a > b;
  const mpq_class& hi = a_big ? a.payload_ : b.payload_;
  const mpq_class& lo = a_big ? b.payload_ : a.payload_;
  if (a.is_log()) return Scalar::log_of(hi / lo);
  return Scalar::rational(hi - lo);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  const int c = cmp(a.payload_, b.payload_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.realization_ == b.realization_ && a.payload_ == b.payload_;
}

mpq_class parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_natural(s.substr(0, slash), s);
    const mpz_class den = parse_natural(s.substr(slash + 1), s);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw ParseError("malformed decimal '" + std::string(s) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : parse_natural(whole, s);
    const mpz_class f = frac.empty() ? mpz_class(0) : parse_natural(frac, s);
    mpq_class q(w * scale + f, scale);
    q.canonicalize();
    return q;
  }
  return mpq_class(parse_natural(s, s));
}

Scalar parse_scalar(std::string_view text) {
  std::string_view s = trim(text);
  const bool is_log = s.starts_with(kLogPrefix);
  if (is_log) s.remove_prefix(kLogPrefix.size());
  const mpq_class q = parse_rational(s);
  try {
    return is_log ? Scalar::log_of(q) : Scalar::rational(q);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

}  // namespace lininv
