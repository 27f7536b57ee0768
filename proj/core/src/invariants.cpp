#include "lininv/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "lininv/detail/walk.hpp"
#include "lininv/errors.hpp"

namespace lininv {

namespace {

std::string pair_text(PairSelection p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }

void require_pair_domain(const AlphaVector& alpha, PairSelection pair) {
  if (alpha.size() < 3) throw PreconditionError("solution sets need m >= 3");
  pair.check_within(alpha.size());
  require_generic(alpha);
}

// Folds `on(acc, reduced_mask)` over every eps in S_{i,j}. The reduced mask
// lives on the m-2 coordinates left after deleting the pair.
template <class Acc, class OnSolution, class Merge>
Acc fold_solutions(const AlphaVector& alpha, PairSelection pair, OnSolution&& on, Merge&& merge) {
  require_pair_domain(alpha, pair);
  const auto& kernel = alpha.kernel();
  const unsigned p = static_cast<unsigned>(pair.i - 1);
  const unsigned q = static_cast<unsigned>(pair.j - 1);
  const unsigned bits = static_cast<unsigned>(alpha.size() - 2);

  if (kernel.has_fast_weights()) {
    const auto w = kernel.fast_weights();
    std::vector<std::int64_t> reduced;
    reduced.reserve(bits);
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k != p && k != q) reduced.push_back(w[k]);
    }
    const std::int64_t lo = std::llabs(w[p] - w[q]);
    const std::int64_t hi = w[p] + w[q];
    return detail::fold_blocks<Acc>(
        bits,
        [&](std::uint64_t first, unsigned low) {
          Acc acc{};
          detail::gray_walk(reduced, first, low, [&](std::uint64_t mask, std::int64_t x) {
            if (x <= lo || x >= hi) {
              if (x == lo || x == hi) throw InternalError("solution on the boundary of a generic vector");
              return;
            }
            on(acc, mask);
          });
          return acc;
        },
        merge);
  }

  return detail::fold_blocks<Acc>(
      bits,
      [&](std::uint64_t first, unsigned low) {
        Acc acc{};
        const std::uint64_t count = std::uint64_t{1} << low;
        for (std::uint64_t t = 0; t < count; ++t) {
          const std::uint64_t mask = first + t;
          // x - a_i - a_j < 0, x + a_i - a_j > 0, x - a_i + a_j > 0
          const int below_sum = kernel.sign(detail::insert_pair_bits(mask, p, q, true, true));
          const int above_diff1 = kernel.sign(detail::insert_pair_bits(mask, p, q, false, true));
          const int above_diff2 = kernel.sign(detail::insert_pair_bits(mask, p, q, true, false));
          if (below_sum == 0 || above_diff1 == 0 || above_diff2 == 0) {
            throw InternalError("solution on the boundary of a generic vector");
          }
          if (below_sum < 0 && above_diff1 > 0 && above_diff2 > 0) on(acc, mask);
        }
        return acc;
      },
      merge);
}

// Sum over all eps in {+-1}^m of term(mask, sgn<eps, alpha>).
template <class Term>
std::int64_t sum_over_signs(const AlphaVector& alpha, Term&& term) {
  const auto& kernel = alpha.kernel();
  const unsigned bits = static_cast<unsigned>(alpha.size());
  auto add = [](std::int64_t& into, std::int64_t from) { into += from; };
  if (kernel.has_fast_weights()) {
    const auto w = kernel.fast_weights();
    return detail::fold_blocks<std::int64_t>(
        bits,
        [&](std::uint64_t first, unsigned low) {
          std::int64_t acc = 0;
          detail::gray_walk(w, first, low,
                            [&](std::uint64_t mask, std::int64_t x) { acc += term(mask, sign_of(x)); });
          return acc;
        },
        add);
  }
  return detail::fold_blocks<std::int64_t>(
      bits,
      [&](std::uint64_t first, unsigned low) {
        std::int64_t acc = 0;
        const std::uint64_t count = std::uint64_t{1} << low;
        for (std::uint64_t t = 0; t < count; ++t) acc += term(first + t, kernel.sign(first + t));
        return acc;
      },
      add);
}

std::int64_t exact_quotient(std::int64_t total, std::int64_t divisor, const char* what) {
  if (total % divisor != 0) {
    throw InternalError(std::string(what) + ": sign sum " + std::to_string(total) + " not divisible by " +
                        std::to_string(divisor));
  }
  return total / divisor;
}

int bit_sign(std::uint64_t mask, std::size_t k) { return ((mask >> k) & 1U) != 0 ? -1 : 1; }

}  // namespace

OrientedPair orient_by_value(const AlphaVector& alpha, PairSelection pair) {
  pair.check_within(alpha.size());
  if (alpha.at(pair.j) < alpha.at(pair.i)) return {pair.j, pair.i};
  return {pair.i, pair.j};
}

SolutionSet enumerate_solutions(const AlphaVector& alpha, PairSelection pair) {
  using Masks = std::vector<std::uint64_t>;
  Masks masks = fold_solutions<Masks>(
      alpha, pair, [](Masks& acc, std::uint64_t mask) { acc.push_back(mask); },
      [](Masks& into, Masks&& from) { into.insert(into.end(), from.begin(), from.end()); });
  std::sort(masks.begin(), masks.end());

  const AlphaVector reduced = delete_pair(alpha, pair);
  SolutionSet set{pair, {}};
  set.solutions.reserve(masks.size());
  for (std::uint64_t mask : masks) set.solutions.emplace_back(reduced.size(), mask, reduced.coordinate_map());
  return set;
}

PairTally tally_solutions(const AlphaVector& alpha, PairSelection pair) {
  return fold_solutions<PairTally>(
      alpha, pair,
      [](PairTally& acc, std::uint64_t mask) {
        ++acc.count;
        acc.signed_count += mask_product(mask);
      },
      [](PairTally& into, PairTally&& from) {
        into.count += from.count;
        into.signed_count += from.signed_count;
      });
}

std::int64_t signed_count(const AlphaVector& alpha, PairSelection pair) {
  return tally_solutions(alpha, pair).signed_count;
}

std::uint64_t solution_count(const AlphaVector& alpha, PairSelection pair) {
  return tally_solutions(alpha, pair).count;
}

int parity(const AlphaVector& alpha, PairSelection pair) { return tally_solutions(alpha, pair).parity(); }

std::int64_t extended_signed_count(const AlphaVector& alpha, PairSelection pair, std::size_t h) {
  if (alpha.size() < 4) throw PreconditionError("extended signed count needs m >= 4");
  (void)alpha.at(h);
  if (h == pair.i || h == pair.j) {
    throw PreconditionError("index h=" + std::to_string(h) + " collides with pair " + pair_text(pair));
  }
  const std::size_t h_reduced = (h - 1) - (pair.i < h ? 1 : 0) - (pair.j < h ? 1 : 0);
  return fold_solutions<std::int64_t>(
      alpha, pair,
      [h_reduced](std::int64_t& acc, std::uint64_t mask) {
        acc += bit_sign(mask, h_reduced) * mask_product(mask);
      },
      [](std::int64_t& into, std::int64_t from) { into += from; });
}

std::int64_t closed_form_g(const AlphaVector& alpha) {
  if (alpha.size() < 3) throw PreconditionError("closed form needs m >= 3");
  require_generic(alpha);
  const std::int64_t total =
      sum_over_signs(alpha, [](std::uint64_t mask, int s) -> std::int64_t { return s * mask_product(mask); });
  return -exact_quotient(total, 4, "closed_form_g");
}

std::int64_t count_via_sign_sum(const AlphaVector& alpha, PairSelection pair) {
  require_pair_domain(alpha, pair);
  const std::size_t fixed = orient_by_value(alpha, pair).i - 1;
  const std::int64_t total = sum_over_signs(alpha, [fixed](std::uint64_t mask, int s) -> std::int64_t {
    return ((mask >> fixed) & 1U) != 0 ? 0 : s;
  });
  return exact_quotient(total, 2, "count_via_sign_sum");
}

std::int64_t signed_count_even_via_sign_sum(const AlphaVector& alpha, PairSelection pair) {
  if (alpha.size() % 2 != 0) throw PreconditionError("even-length sign-sum formula called with odd m");
  require_pair_domain(alpha, pair);
  const std::size_t larger = orient_by_value(alpha, pair).j - 1;
  const std::int64_t total = sum_over_signs(alpha, [larger](std::uint64_t mask, int s) -> std::int64_t {
    return bit_sign(mask, larger) * s * mask_product(mask);
  });
  return exact_quotient(total, 4, "signed_count_even_via_sign_sum");
}

InvariantReport verify_invariance(const AlphaVector& alpha) {
  const std::size_t m = alpha.size();
  if (m < 3) throw PreconditionError("invariance check needs m >= 3");
  require_generic(alpha);

  InvariantReport report;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      const PairSelection pair(i, j);
      const PairTally t = tally_solutions(alpha, pair);
      report.rows.push_back({pair, t.count, t.parity(), t.signed_count});
    }
  }

  const PairRow& first = report.rows.front();
  const bool odd = m % 2 == 1;
  if (odd) report.signed_count_invariant = true;
  else report.signed_count_depends_on_max_only = true;

  for (const PairRow& row : report.rows) {
    if (row.parity != first.parity) {
      report.parity_invariant = false;
      report.violations.push_back("parity differs between " + pair_text(first.pair) + " and " +
                                  pair_text(row.pair));
    }
    if (odd && row.signed_count != first.signed_count) {
      report.signed_count_invariant = false;
      report.violations.push_back("N differs between " + pair_text(first.pair) + " and " +
                                  pair_text(row.pair));
    }
    const Scalar& a = alpha.at(row.pair.i);
    const Scalar& b = alpha.at(row.pair.j);
    const Scalar& lo = a < b ? a : b;
    const Scalar& hi = a < b ? b : a;

    if (!odd) {
      auto [it, fresh] = report.signed_count_by_max_omitted.emplace(hi, row.signed_count);
      if (!fresh && it->second != row.signed_count) {
        report.signed_count_depends_on_max_only = false;
        report.violations.push_back("N not a function of the larger component at " + pair_text(row.pair));
      }
    }
    auto [it, fresh] = report.count_by_min_omitted.emplace(lo, row.count);
    if (!fresh && it->second != row.count) {
      report.count_depends_on_min_only = false;
      report.violations.push_back("#S not a function of the smaller component at " + pair_text(row.pair));
    }

    if (m == 4) {
      const std::int64_t abs_n = std::llabs(row.signed_count);
      if (row.count > 2 || abs_n != static_cast<std::int64_t>(row.count % 2) ||
          abs_n != std::llabs(first.signed_count)) {
        report.violations.push_back("|N| law for m = 4 fails at " + pair_text(row.pair));
      }
    }
  }
  return report;
}

mpq_class min_nonzero_signed_sum(const AlphaVector& alpha) {
  if (alpha.is_log()) throw PreconditionError("exact minimum signed sum needs a rational vector");
  const auto& kernel = alpha.kernel();
  const unsigned bits = static_cast<unsigned>(alpha.size() - 1);
  if (kernel.has_fast_weights()) {
    const auto w = kernel.fast_weights();
    const std::int64_t lead = w[0];
    const auto rest = w.subspan(1);
    const std::int64_t best = detail::fold_blocks<std::int64_t>(
        bits,
        [&](std::uint64_t first, unsigned low) {
          std::int64_t found = std::numeric_limits<std::int64_t>::max();
          detail::gray_walk(rest, first, low, [&](std::uint64_t, std::int64_t sum) {
            const std::int64_t x = std::llabs(sum + lead);
            if (x != 0 && x < found) found = x;
          });
          return found;
        },
        [](std::int64_t& into, std::int64_t from) { into = std::min(into, from); });
    mpq_class out(mpz_class(static_cast<long>(best)), kernel.scale());
    out.canonicalize();
    return out;
  }
  std::optional<mpq_class> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    mpq_class x = abs(kernel.signed_sum(mask << 1));
    if (sgn(x) != 0 && (!best || x < *best)) best = x;
  }
  return *best;
}

WallCrossing wall_crossing_check(const AlphaVector& on_wall, std::size_t l, PairSelection pair,
                                 std::optional<mpq_class> delta) {
  const std::size_t m = on_wall.size();
  if (on_wall.is_log()) throw PreconditionError("wall crossing needs a rational vector");
  if (m < 3) throw PreconditionError("wall crossing needs m >= 3");
  pair.check_within(m);
  const Scalar& moved = on_wall.at(l);
  if (l == pair.i || l == pair.j) {
    throw PreconditionError("moved coordinate l=" + std::to_string(l) + " lies in pair " + pair_text(pair));
  }

  const mpq_class gap = min_nonzero_signed_sum(on_wall);
  WallCrossing out;
  out.delta = delta ? *delta : mpq_class(gap / 4);
  out.delta.canonicalize();
  if (sgn(out.delta) <= 0) throw PreconditionError("delta must be positive");
  if (out.delta >= gap / 2) {
    throw PreconditionError("delta " + out.delta.get_str() + " is not below half the minimum nonzero signed sum " +
                            gap.get_str());
  }
  if (out.delta >= moved.payload()) throw PreconditionError("delta would make alpha_l non-positive");

  const auto& kernel = on_wall.kernel();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
    if (kernel.sign(mask << 1) == 0) out.wall_solutions.emplace_back(m, mask << 1);
  }

  const AlphaVector plus = with_component(on_wall, l, Scalar::rational(moved.payload() + out.delta));
  const AlphaVector minus = with_component(on_wall, l, Scalar::rational(moved.payload() - out.delta));
  for (const AlphaVector* side : {&plus, &minus}) {
    if (!check_generic(*side).generic) throw PreconditionError("endpoint " + side->to_string() + " is degenerate");
  }

  const PairTally above = tally_solutions(plus, pair);
  const PairTally below = tally_solutions(minus, pair);
  out.jump_signed_count = below.signed_count - above.signed_count;
  out.jump_count = static_cast<std::int64_t>(below.count) - static_cast<std::int64_t>(above.count);

  const OrientedPair o = orient_by_value(on_wall, pair);
  std::int64_t odd_form = 0;
  for (const SignVector& r : out.wall_solutions) {
    const int ei = r[o.i - 1];
    const int ej = r[o.j - 1];
    const int el = r[l - 1];
    int rest = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (k != o.i - 1 && k != o.j - 1) rest *= -ej * r[k];
    }
    out.predicted_count -= ei * el;
    out.predicted_signed_count -= ei * el * rest;
    odd_form += el * r.product();
  }
  if (m % 2 == 1 && odd_form != out.predicted_signed_count) {
    throw InternalError("odd-m wall-crossing forms disagree");
  }
  return out;
}

}  // namespace lininv
