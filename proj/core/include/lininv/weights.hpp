#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "lininv/alpha_vector.hpp"
#include "lininv/sign_vector.hpp"

namespace lininv {

/// f : {+-1}^{m-2} -> Q, tabulated by sign-vector mask.
class WeightFunction {
 public:
  WeightFunction(std::size_t m, std::vector<mpq_class> table);

  static WeightFunction zero(std::size_t m);
  /// f(eps) = prod_k eps_k.
  static WeightFunction parity_product(std::size_t m);

  std::size_t m() const { return m_; }
  const std::vector<mpq_class>& table() const { return table_; }
  const mpq_class& operator()(std::uint64_t mask) const { return table_[mask]; }

  /// True when f = c * g for some rational c (zero is proportional to zero only).
  bool proportional_to(const WeightFunction& other) const;

 private:
  std::size_t m_;
  std::vector<mpq_class> table_;
};

/// One homogeneous equation sum_t coefficient_t * f(unknown_t) = 0.
/// Rows produced by build_constraints have one or two terms with +-1
/// coefficients, sorted by unknown.
struct ConstraintRow {
  std::vector<std::pair<std::uint64_t, int>> terms;

  friend bool operator==(const ConstraintRow&, const ConstraintRow&) = default;
};

struct ConstraintSystem {
  std::size_t m = 0;
  std::size_t unknowns = 0;
  std::vector<ConstraintRow> rows;
};

/// For every eps in {+-1}^m and every ordered pair of index pairs
/// (i<j), (i'<j'), the equation
///   eps_i f(-eps_j * eps_{i,j}) = eps_{i'} f(-eps_{j'} * eps_{i',j'}),
/// normalized, with trivial rows dropped and duplicates removed.
/// Requires 3 <= m <= config().max_weight_m.
ConstraintSystem build_constraints(std::size_t m);

struct WeightSpace {
  std::size_t dimension = 0;
  std::vector<WeightFunction> basis;
  std::size_t rank = 0;
};

/// Exact nullspace of build_constraints(m) by rational Gauss-Jordan
/// elimination (first nonzero pivot). Basis vectors carry a 1 in their
/// free column.
WeightSpace solve_weight_space(std::size_t m);

struct StarCounterexample {
  SignVector eps;
  PairSelection pair;
  PairSelection other_pair;
};

struct StarCheck {
  bool holds = true;
  std::optional<StarCounterexample> counterexample;
};

/// Exhaustive check of the pair-independence condition. The first violating
/// eps in mask order is reported against the pair (1,2).
StarCheck check_condition_star(const WeightFunction& f);

/// Sum of f over S_{i,j}(alpha); alpha must have length f.m().
mpq_class weighted_count(const AlphaVector& alpha, PairSelection pair, const WeightFunction& f);

}  // namespace lininv
