#pragma once

#include "monoclosure/ideal_expr.hpp"
#include "monoclosure/monomial_ideal.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace monoclosure {

// Textual ideals.
//
//   expr   := inter ('+' inter)*
//   inter  := colon ('&' colon)*            '∩' is accepted for '&'
//   colon  := prod (':' prod)*
//   prod   := pow ('*' pow)*
//   pow    := atom ('^' INT)*
//   atom   := '(' expr (',' expr)* ')'      a comma list is the sum of its items
//           | 'm' ['_' '{' var (',' var)* '}']
//           | ('rad' | 'sqrt') '(' expr ')'
//           | var | '0' | '1'
//   var    := 'x' INT | 'x' | 'y' | 'z' | INT   (bare INT only inside m_{...})
//
// A variable is the principal ideal it generates, so "(x^2*y, y^3)" is the
// ideal with those two generators. Aliases x, y, z stand for x1, x2, x3 and
// are rejected when the dimension exceeds 3. Without an explicit dimension,
// the highest variable index used decides it.

/// Highest variable index mentioned in `text` (1-based); nullopt if none.
std::optional<std::size_t> infer_dimension(std::string_view text);

IdealExpr parse_expression(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

/// Parses and evaluates. Throws ParseError with the offending position.
MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

/// A single monomial such as "x*y^2" or "1".
ExponentVector parse_monomial(std::string_view text, std::size_t dim);

std::string variable_name(std::size_t index, std::size_t dim);
std::string format_monomial(const ExponentVector& u);
/// Generators only, comma separated: "x^2, x*y^2, y^3".
std::string format_generators(const MonomialIdeal& ideal);
/// Full normal form that parse_ideal reads back: "(x^2, y^3) + m^10".
std::string format_ideal(const MonomialIdeal& ideal);

}  // namespace monoclosure
