#pragma once

#include "monoclosure/monomial_ideal.hpp"

#include <vector>

namespace monoclosure {

/// Formula over monomial ideals. Evaluation is total on well-formed trees
/// and always yields a normalized MonomialIdeal.
class IdealExpr {
 public:
  enum class Op { literal, sum, product, intersection, colon, power, radical };

  static IdealExpr literal(MonomialIdeal ideal);
  static IdealExpr binary(Op op, IdealExpr lhs, IdealExpr rhs);
  static IdealExpr power(IdealExpr base, Integer exponent);
  static IdealExpr radical(IdealExpr inner);

  Op op() const noexcept { return op_; }
  const std::vector<IdealExpr>& operands() const noexcept { return operands_; }

  MonomialIdeal evaluate() const;

 private:
  IdealExpr(Op op, MonomialIdeal value) : op_(op), value_(std::move(value)) {}

  Op op_;
  MonomialIdeal value_;  // literal payload; unused otherwise
  Integer exponent_ = 0;
  std::vector<IdealExpr> operands_;
};

}  // namespace monoclosure
