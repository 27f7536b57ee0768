#include "lininv/weights.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_set>

#include "lininv/config.hpp"
#include "lininv/detail/walk.hpp"
#include "lininv/errors.hpp"
#include "lininv/invariants.hpp"

namespace lininv {

namespace {

void check_m(std::size_t m) {
  if (m < 3 || m > config().max_weight_m) {
    throw PreconditionError("weight system size m=" + std::to_string(m) + " outside [3," +
                            std::to_string(config().max_weight_m) + "]");
  }
}

struct IndexPair {
  unsigned i;
  unsigned j;
};

std::vector<IndexPair> all_pairs(std::size_t m) {
  std::vector<IndexPair> out;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) out.push_back({i, j});
  }
  return out;
}

// The term eps_i f(-eps_j * eps_{i,j}) as (sign, unknown).
struct Term {
  int sign;
  std::uint64_t unknown;
};

Term star_term(std::uint64_t eps, IndexPair p, std::size_t m) {
  std::uint64_t reduced = detail::remove_pair_bits(eps, p.i, p.j);
  // -eps_j = -1 exactly when eps_j = +1; that flips every reduced coordinate.
  if (((eps >> p.j) & 1U) == 0) reduced ^= full_mask(m - 2);
  const int sign = ((eps >> p.i) & 1U) != 0 ? -1 : 1;
  return {sign, reduced};
}

// Sparse row kept sorted by column.
using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;

SparseRow axpy(const SparseRow& x, const mpq_class& a, const SparseRow& y) {
  // x + a*y
  SparseRow out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      out.push_back(*ix++);
    } else if (ix == x.end() || iy->first < ix->first) {
      out.emplace_back(iy->first, a * iy->second);
      ++iy;
    } else {
      mpq_class v = ix->second + a * iy->second;
      if (sgn(v) != 0) out.emplace_back(ix->first, std::move(v));
      ++ix;
      ++iy;
    }
  }
  return out;
}

const mpq_class* coefficient(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& entry, std::size_t c) { return entry.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// Reduced row echelon form maintained incrementally: every pivot row has a
// 1 in its pivot column and zeros in all other pivot columns.
class Echelon {
 public:
  explicit Echelon(std::size_t columns) : pivot_row_(columns, kNoPivot) {}

  void add(SparseRow row) {
    // Columns present in the incoming row may be pivots; pivot rows contain
    // no other pivot columns, so one pass over the original entries suffices.
    const SparseRow original = row;
    for (const auto& [col, _] : original) {
      if (pivot_row_[col] == kNoPivot) continue;
      const mpq_class* c = coefficient(row, col);
      if (c == nullptr) continue;
      const mpq_class factor = -*c;
      row = axpy(row, factor, rows_[pivot_row_[col]]);
    }
    if (row.empty()) return;

    const std::size_t pivot = row.front().first;
    const mpq_class inv = 1 / row.front().second;
    for (auto& entry : row) entry.second *= inv;
    for (SparseRow& existing : rows_) {
      if (const mpq_class* c = coefficient(existing, pivot)) {
        const mpq_class factor = -*c;
        existing = axpy(existing, factor, row);
      }
    }
    pivot_row_[pivot] = rows_.size();
    rows_.push_back(std::move(row));
  }

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == pivot_row_.size(); }

  std::vector<std::vector<mpq_class>> nullspace() const {
    std::vector<std::vector<mpq_class>> basis;
    const std::size_t n = pivot_row_.size();
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
      if (pivot_row_[free_col] != kNoPivot) continue;
      std::vector<mpq_class> v(n);
      v[free_col] = 1;
      for (const SparseRow& row : rows_) {
        if (const mpq_class* c = coefficient(row, free_col)) v[row.front().first] = -*c;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static constexpr std::size_t kNoPivot = ~std::size_t{0};
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_row_;
};

}  // namespace

WeightFunction::WeightFunction(std::size_t m, std::vector<mpq_class> table) : m_(m), table_(std::move(table)) {
  if (m < 3 || m - 2 >= 63) throw PreconditionError("weight function needs m >= 3");
  if (table_.size() != (std::size_t{1} << (m - 2))) {
    throw PreconditionError("weight table for m=" + std::to_string(m) + " needs " +
                            std::to_string(std::size_t{1} << (m - 2)) + " entries");
  }
}

WeightFunction WeightFunction::zero(std::size_t m) {
  return WeightFunction(m, std::vector<mpq_class>(std::size_t{1} << (m - 2)));
}

WeightFunction WeightFunction::parity_product(std::size_t m) {
  std::vector<mpq_class> table(std::size_t{1} << (m - 2));
  for (std::size_t mask = 0; mask < table.size(); ++mask) table[mask] = mask_product(mask);
  return WeightFunction(m, std::move(table));
}

bool WeightFunction::proportional_to(const WeightFunction& other) const {
  if (m_ != other.m_) return false;
  std::optional<mpq_class> ratio;
  for (std::size_t k = 0; k < table_.size(); ++k) {
    const bool zero_a = sgn(table_[k]) == 0;
    const bool zero_b = sgn(other.table_[k]) == 0;
    if (zero_a != zero_b) return false;
    if (zero_a) continue;
    const mpq_class r = table_[k] / other.table_[k];
    if (!ratio) ratio = r;
    else if (*ratio != r) return false;
  }
  return true;
}

ConstraintSystem build_constraints(std::size_t m) {
  check_m(m);
  const auto pairs = all_pairs(m);
  const std::size_t unknowns = std::size_t{1} << (m - 2);

  // Key: (first unknown, second unknown, relation) packed; relation 2 marks
  // the single-term row f(u) = 0.
  std::unordered_set<std::uint64_t> seen;
  std::vector<ConstraintRow> rows;
  auto emit = [&](Term a, Term b) {
    if (a.unknown == b.unknown) {
      if (a.sign == b.sign) return;
      const std::uint64_t key = (a.unknown << 34) | (a.unknown << 2) | 2U;
      if (seen.insert(key).second) rows.push_back({{{a.unknown, 1}}});
      return;
    }
    if (b.unknown < a.unknown) std::swap(a, b);
    // a.sign f(a) - b.sign f(b) = 0, scaled so the first coefficient is +1.
    const int second = -a.sign * b.sign;
    const std::uint64_t key = (a.unknown << 34) | (b.unknown << 2) | (second > 0 ? 1U : 0U);
    if (seen.insert(key).second) rows.push_back({{{a.unknown, 1}, {b.unknown, second}}});
  };

  std::vector<Term> terms(pairs.size());
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << m); ++eps) {
    for (std::size_t p = 0; p < pairs.size(); ++p) terms[p] = star_term(eps, pairs[p], m);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      for (std::size_t r = 0; r < pairs.size(); ++r) {
        if (p != r) emit(terms[p], terms[r]);
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ConstraintRow& x, const ConstraintRow& y) { return x.terms < y.terms; });
  return {m, unknowns, std::move(rows)};
}

WeightSpace solve_weight_space(std::size_t m) {
  const ConstraintSystem system = build_constraints(m);
  Echelon echelon(system.unknowns);
  for (const ConstraintRow& row : system.rows) {
    SparseRow sparse;
    for (const auto& [unknown, c] : row.terms) sparse.emplace_back(static_cast<std::size_t>(unknown), mpq_class(c));
    echelon.add(std::move(sparse));
    if (echelon.full()) break;
  }
  WeightSpace space;
  space.rank = echelon.rank();
  for (auto& v : echelon.nullspace()) space.basis.emplace_back(m, std::move(v));
  space.dimension = space.basis.size();
  return space;
}

StarCheck check_condition_star(const WeightFunction& f) {
  const std::size_t m = f.m();
  check_m(m);
  const auto pairs = all_pairs(m);
  for (std::uint64_t eps = 0; eps < (std::uint64_t{1} << m); ++eps) {
    const Term ref = star_term(eps, pairs.front(), m);
    const mpq_class ref_value = ref.sign * f(ref.unknown);
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const Term t = star_term(eps, pairs[p], m);
      if (t.sign * f(t.unknown) != ref_value) {
        return {false, StarCounterexample{SignVector(m, eps), PairSelection(1, 2),
                                          PairSelection(pairs[p].i + 1, pairs[p].j + 1)}};
      }
    }
  }
  return {};
}

mpq_class weighted_count(const AlphaVector& alpha, PairSelection pair, const WeightFunction& f) {
  if (alpha.size() != f.m()) throw PreconditionError("weight function length does not match alpha");
  mpq_class total = 0;
  for (const SignVector& eps : enumerate_solutions(alpha, pair).solutions) total += f(eps.bits());
  return total;
}

}  // namespace lininv
