#pragma once

#include "monoclosure/numeric.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace monoclosure {

/// Exponent vector of a monomial x1^b1 * ... * xd^bd. Coordinates are
/// nonnegative; the dimension is fixed at construction.
class ExponentVector {
 public:
  ExponentVector() = default;

  /// The zero vector (the monomial 1) in `dim` variables.
  explicit ExponentVector(std::size_t dim);

  /// Throws PreconditionError on a negative coordinate.
  explicit ExponentVector(std::vector<Integer> coords);
  ExponentVector(std::initializer_list<long long> coords);

  /// `value` times the `index`-th unit vector.
  static ExponentVector unit(std::size_t dim, std::size_t index, Integer value = 1);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  Integer degree() const;
  /// Sum of the coordinates indexed by `vars`.
  Integer degree_on(std::span<const std::size_t> vars) const;
  bool is_zero() const;

  /// Componentwise <=, i.e. the monomial divides `other`.
  bool divides(const ExponentVector& other) const;

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector& operator+=(const ExponentVector& other);
  ExponentVector scaled(const Integer& factor) const;

  /// Componentwise maximum.
  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
  /// Componentwise max(a - b, 0), the exponent of lcm(a, b) / b.
  friend ExponentVector quotient(const ExponentVector& a, const ExponentVector& b);
  /// 0/1 indicator of the nonzero coordinates.
  friend ExponentVector support(const ExponentVector& a);

  /// Lexicographic on coordinates.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector& a, const ExponentVector& b) = default;

 private:
  std::vector<Integer> coords_;
};

/// Throws DimensionMismatch unless the two dimensions agree.
void require_same_dim(std::size_t expected, std::size_t actual);

/// Degree first, then lexicographic. Used by the closure enumeration.
bool graded_lex_less(const ExponentVector& a, const ExponentVector& b);

}  // namespace monoclosure
