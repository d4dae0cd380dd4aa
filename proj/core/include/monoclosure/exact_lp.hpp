#pragma once

#include "monoclosure/numeric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace monoclosure {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Outcome of the feasibility problem {x : A x = b, x >= 0}.
///
/// Feasible: `point` is a basic feasible solution. Infeasible: `farkas` is a
/// vector y with y^T A >= 0 componentwise and y^T b < 0.
struct LpFeasibility {
  bool feasible = false;
  std::vector<Rational> point;
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

/// Phase-one simplex over exact rationals with Bland's rule. Rows with a
/// negative right-hand side are negated internally; the returned Farkas
/// vector refers to the rows as given.
LpFeasibility find_feasible_point(const RationalMatrix& a, std::span<const Rational> b);

}  // namespace monoclosure
