#include "oracle.hpp"

#include <functional>

namespace oracle {

namespace {

int sgn_q(const mpq_class& q) { return sgn(q); }

void walk_signs(std::size_t length, const std::function<void(std::vector<int>&)>& visit) {
  std::vector<int> eps(length, 1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == length) {
      visit(eps);
      return;
    }
    eps[k] = 1;
    rec(k + 1);
    eps[k] = -1;
    rec(k + 1);
  };
  rec(0);
}

mpq_class dot(const std::vector<int>& eps, const Vec& alpha) {
  mpq_class total = 0;
  for (std::size_t k = 0; k < eps.size(); ++k) total += eps[k] * alpha[k];
  return total;
}

}  // namespace

std::vector<std::vector<int>> solutions(const Vec& alpha, std::size_t i, std::size_t j) {
  Vec rest;
  for (std::size_t k = 1; k <= alpha.size(); ++k) {
    if (k != i && k != j) rest.push_back(alpha[k - 1]);
  }
  const mpq_class a = alpha[i - 1];
  const mpq_class b = alpha[j - 1];
  const mpq_class lo = a > b ? mpq_class(a - b) : mpq_class(b - a);
  const mpq_class hi = a + b;
  std::vector<std::vector<int>> out;
  walk_signs(rest.size(), [&](std::vector<int>& eps) {
    const mpq_class s = dot(eps, rest);
    if (lo < s && s < hi) out.push_back(eps);
  });
  return out;
}

Counts brute_force(const Vec& alpha, std::size_t i, std::size_t j) {
  Counts c;
  for (const auto& eps : solutions(alpha, i, j)) {
    int product = 1;
    for (int e : eps) product *= e;
    ++c.count;
    c.signed_count += product;
  }
  return c;
}

std::int64_t g(const Vec& alpha) {
  std::int64_t total = 0;
  walk_signs(alpha.size(), [&](std::vector<int>& eps) {
    int product = 1;
    for (int e : eps) product *= e;
    total += sgn_q(dot(eps, alpha)) * product;
  });
  return -total / 4;
}

std::size_t zero_sum_classes(const Vec& alpha) {
  std::size_t zeros = 0;
  walk_signs(alpha.size(), [&](std::vector<int>& eps) {
    if (eps[0] == 1 && sgn_q(dot(eps, alpha)) == 0) ++zeros;
  });
  return zeros;
}

bool generic(const Vec& alpha) { return zero_sum_classes(alpha) == 0; }

mpq_class min_abs_sum(const Vec& alpha) {
  mpq_class best = -1;
  walk_signs(alpha.size(), [&](std::vector<int>& eps) {
    mpq_class s = dot(eps, alpha);
    if (sgn(s) < 0) s = -s;
    if (sgn(s) != 0 && (sgn(best) < 0 || s < best)) best = s;
  });
  return best;
}

int sum_sign(const Vec& alpha, std::uint64_t mask) {
  mpq_class total = 0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (((mask >> k) & 1U) != 0) total -= alpha[k];
    else total += alpha[k];
  }
  return sgn_q(total);
}

lininv::AlphaVector to_alpha(const Vec& alpha) { return lininv::AlphaVector::from_rationals(alpha); }

Vec Generator::integers(std::size_t m, long max_value) {
  std::uniform_int_distribution<long> dist(1, max_value);
  Vec out;
  for (std::size_t k = 0; k < m; ++k) out.emplace_back(dist(rng_));
  return out;
}

Vec Generator::generic_rational(std::size_t m) {
  std::uniform_int_distribution<long> num(1, 40);
  std::uniform_int_distribution<long> den(1, 6);
  for (;;) {
    Vec out;
    for (std::size_t k = 0; k < m; ++k) {
      mpq_class q(num(rng_), den(rng_));
      q.canonicalize();
      out.push_back(q);
    }
    if (generic(out)) return out;
  }
}

Vec Generator::generic_integers(std::size_t m, long max_value) {
  for (;;) {
    Vec out = integers(m, max_value);
    if (generic(out)) return out;
  }
}

}  // namespace oracle
