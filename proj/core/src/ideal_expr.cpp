#include "monoclosure/ideal_expr.hpp"

#include "monoclosure/errors.hpp"

namespace monoclosure {

IdealExpr IdealExpr::literal(MonomialIdeal ideal) { return IdealExpr(Op::literal, std::move(ideal)); }

IdealExpr IdealExpr::binary(Op op, IdealExpr lhs, IdealExpr rhs) {
  if (op == Op::literal || op == Op::power || op == Op::radical) {
    throw PreconditionError("not a binary ideal operator");
  }
  const std::size_t dim = lhs.value_.dim();
  IdealExpr out(op, MonomialIdeal::zero(dim));
  out.operands_.push_back(std::move(lhs));
  out.operands_.push_back(std::move(rhs));
  return out;
}

IdealExpr IdealExpr::power(IdealExpr base, Integer exponent) {
  if (exponent < 0) throw PreconditionError("negative ideal power");
  IdealExpr out(Op::power, MonomialIdeal::zero(base.value_.dim()));
  out.exponent_ = std::move(exponent);
  out.operands_.push_back(std::move(base));
  return out;
}

IdealExpr IdealExpr::radical(IdealExpr inner) {
  IdealExpr out(Op::radical, MonomialIdeal::zero(inner.value_.dim()));
  out.operands_.push_back(std::move(inner));
  return out;
}

MonomialIdeal IdealExpr::evaluate() const {
  switch (op_) {
    case Op::literal:
      return value_;
    case Op::sum:
      return monoclosure::sum(operands_[0].evaluate(), operands_[1].evaluate());
    case Op::product:
      return monoclosure::product(operands_[0].evaluate(), operands_[1].evaluate());
    case Op::intersection:
      return monoclosure::intersection(operands_[0].evaluate(), operands_[1].evaluate());
    case Op::colon:
      return monoclosure::colon(operands_[0].evaluate(), operands_[1].evaluate());
    case Op::power:
      return monoclosure::power(operands_[0].evaluate(), exponent_);
    case Op::radical:
      return monoclosure::radical(operands_[0].evaluate());
  }
  throw std::logic_error("unknown ideal operator");
}

}  // namespace monoclosure
