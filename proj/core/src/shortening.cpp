#include "lininv/shortening.hpp"

#include <string>
#include <vector>

#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"

namespace lininv {

namespace {

void check_index(const AlphaVector& alpha, std::size_t index, const char* name) {
  if (index < 1 || index > alpha.size()) {
    throw PreconditionError(std::string("index ") + name + "=" + std::to_string(index) + " outside [1," +
                            std::to_string(alpha.size()) + "]");
  }
}

void check_distinct(std::initializer_list<std::size_t> indices) {
  for (auto a = indices.begin(); a != indices.end(); ++a) {
    for (auto b = a + 1; b != indices.end(); ++b) {
      if (*a == *b) throw PreconditionError("indices must be distinct");
    }
  }
}

// N of an odd-length vector, where every pair gives the same value.
std::int64_t pair_free_signed_count(const AlphaVector& v) {
  if (v.size() % 2 == 0 || v.size() < 3) throw InternalError("pair-free N needs odd length >= 3");
  return signed_count(v, PairSelection(1, 2));
}

std::int64_t count_by_value(const AlphaVector& v, const Scalar& a, const Scalar& b) {
  return static_cast<std::int64_t>(solution_count(v, pair_by_value(v, a, b)));
}

std::int64_t signed_count_by_value(const AlphaVector& v, const Scalar& a, const Scalar& b) {
  return signed_count(v, pair_by_value(v, a, b));
}

}  // namespace

const char* to_string(ShortenSign sign) { return sign == ShortenSign::kPlus ? "+" : "-"; }

const char* to_string(SplitOrientation orientation) {
  return orientation == SplitOrientation::kStated ? "stated" : "swapped";
}

ShortenedVector shorten(const AlphaVector& alpha, std::size_t j, std::size_t k, ShortenSign sign) {
  check_index(alpha, j, "j");
  check_index(alpha, k, "k");
  if (j == k) throw PreconditionError("shortening needs j != k");
  if (alpha.size() < 2) throw PreconditionError("shortening needs m >= 2");
  const Scalar& aj = alpha.at(j);
  const Scalar& ak = alpha.at(k);
  if (sign == ShortenSign::kMinus && aj == ak) {
    throw PreconditionError("|alpha_j - alpha_k| = 0 for j=" + std::to_string(j) + ", k=" + std::to_string(k));
  }
  const Scalar replaced = sign == ShortenSign::kPlus ? aj + ak : abs_diff(aj, ak);

  std::vector<Scalar> comps;
  std::vector<std::size_t> map;
  comps.reserve(alpha.size() - 1);
  for (std::size_t p = 1; p <= alpha.size(); ++p) {
    if (p == k) continue;
    comps.push_back(p == j ? replaced : alpha.at(p));
    map.push_back(alpha.coordinate_map()[p - 1]);
  }
  ShortenedVector out{AlphaVector(std::move(comps), std::move(map)), j, sign, k};
  // Any signed sum of the shortened vector is a signed sum of alpha.
  if (alpha.genericity_status() == GenericityStatus::kGeneric && !check_generic(out.base).generic) {
    throw InternalError("shortened vector of a generic vector is degenerate");
  }
  return out;
}

PairSelection pair_by_value(const AlphaVector& alpha, const Scalar& first, const Scalar& second) {
  std::size_t a = 0;
  for (std::size_t p = 1; p <= alpha.size() && a == 0; ++p) {
    if (alpha.at(p) == first) a = p;
  }
  std::size_t b = 0;
  for (std::size_t p = 1; p <= alpha.size() && b == 0; ++p) {
    if (p != a && alpha.at(p) == second) b = p;
  }
  if (a == 0 || b == 0) {
    throw PreconditionError("no pair with values " + first.to_string() + "," + second.to_string() + " in " +
                            alpha.to_string());
  }
  return PairSelection(a, b);
}

IdentityCheck verify_count_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t k) {
  if (alpha.size() < 4) throw PreconditionError("count split needs m >= 4");
  check_index(alpha, i, "i");
  check_index(alpha, j, "j");
  check_index(alpha, k, "k");
  check_distinct({i, j, k});
  const Scalar& ai = alpha.at(i);
  const Scalar& aj = alpha.at(j);
  const Scalar& ak = alpha.at(k);
  if (!(ai < aj) || !(ak + ai <= aj)) {
    throw PreconditionError("count split needs alpha_k <= alpha_j - alpha_i");
  }
  require_generic(alpha);
  const auto minus = shorten(alpha, j, k, ShortenSign::kMinus);
  const auto plus = shorten(alpha, j, k, ShortenSign::kPlus);
  IdentityCheck out;
  out.lhs = static_cast<std::int64_t>(solution_count(alpha, PairSelection(i, j)));
  out.rhs = count_by_value(minus.base, ai, abs_diff(aj, ak)) + count_by_value(plus.base, ai, aj + ak);
  return out;
}

IdentityCheck verify_even_signed_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t k) {
  if (alpha.size() < 4 || alpha.size() % 2 != 0) throw PreconditionError("even signed split needs even m >= 4");
  check_index(alpha, i, "i");
  check_index(alpha, j, "j");
  check_index(alpha, k, "k");
  check_distinct({i, j, k});
  const Scalar& aj = alpha.at(j);
  const Scalar& ak = alpha.at(k);
  if (!(alpha.at(i) <= aj)) throw PreconditionError("even signed split needs alpha_i <= alpha_j");
  require_generic(alpha);

  IdentityCheck out;
  out.lhs = signed_count(alpha, PairSelection(i, j));
  out.rhs = -pair_free_signed_count(shorten(alpha, j, k, ShortenSign::kPlus).base);
  if (aj != ak) {
    const int s = aj > ak ? 1 : -1;
    out.rhs += s * pair_free_signed_count(shorten(alpha, j, k, ShortenSign::kMinus).base);
  }
  return out;
}

IdentityCheck verify_pair_count_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t r,
                                      std::size_t s) {
  if (alpha.size() < 4) throw PreconditionError("pair count split needs m >= 4");
  check_index(alpha, i, "i");
  check_index(alpha, j, "j");
  check_index(alpha, r, "r");
  check_index(alpha, s, "s");
  check_distinct({i, j});
  check_distinct({i, r, s});
  const Scalar& ai = alpha.at(i);
  const Scalar& ar = alpha.at(r);
  const Scalar& as = alpha.at(s);
  if (!(ai <= alpha.at(j))) throw PreconditionError("pair count split needs alpha_i <= alpha_j");
  if (ar == as) throw PreconditionError("pair count split needs alpha_r != alpha_s");
  if (!(ar + as >= ai)) throw PreconditionError("pair count split needs alpha_r + alpha_s >= alpha_i");
  const Scalar diff = abs_diff(ar, as);
  if (!(diff >= ai)) throw PreconditionError("pair count split needs |alpha_r - alpha_s| >= alpha_i");
  require_generic(alpha);

  IdentityCheck out;
  out.lhs = static_cast<std::int64_t>(solution_count(alpha, PairSelection(i, j)));
  out.rhs = count_by_value(shorten(alpha, r, s, ShortenSign::kMinus).base, ai, diff) +
            count_by_value(shorten(alpha, r, s, ShortenSign::kPlus).base, ai, ar + as);
  return out;
}

OddSplitCheck verify_odd_signed_split(const AlphaVector& alpha, std::size_t i, std::size_t j, std::size_t k) {
  if (alpha.size() < 5 || alpha.size() % 2 == 0) throw PreconditionError("odd signed split needs odd m >= 5");
  check_index(alpha, i, "i");
  check_index(alpha, j, "j");
  check_index(alpha, k, "k");
  check_distinct({i, j, k});
  const Scalar& ai = alpha.at(i);
  const Scalar& aj = alpha.at(j);
  const Scalar& ak = alpha.at(k);
  require_generic(alpha);

  OddSplitCheck out;
  out.lhs = pair_free_signed_count(alpha);
  const Scalar sum = ai + aj;
  const auto plus = shorten(alpha, i, j, ShortenSign::kPlus);

  if (ai == aj) {
    if (!(ak <= sum)) throw PreconditionError("odd signed split needs alpha_k <= 2 alpha_i");
    out.equal_components = true;
    out.stated_rhs =
        -signed_count_by_value(plus.base, ak, sum) - 2 * pair_free_signed_count(delete_pair(alpha, PairSelection(i, j)));
    out.swapped_rhs = out.stated_rhs;
    return out;
  }

  const Scalar diff = abs_diff(ai, aj);
  if (!(ak <= diff)) throw PreconditionError("odd signed split needs alpha_k <= |alpha_i - alpha_j|");
  const auto minus = shorten(alpha, i, j, ShortenSign::kMinus);
  const std::int64_t a = signed_count_by_value(minus.base, ak, diff);
  const std::int64_t b = signed_count_by_value(plus.base, ak, sum);
  out.stated_rhs = a - b;
  out.swapped_rhs = b - a;
  return out;
}

}  // namespace lininv
