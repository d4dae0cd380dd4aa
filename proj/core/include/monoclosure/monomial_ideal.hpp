#pragma once

#include "monoclosure/exponent_vector.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace monoclosure {

/// The ideal (x_j : j in vars)^degree, held without expanding it.
struct DegreeFloor {
  std::vector<std::size_t> vars;  // sorted, distinct, 0-based
  Integer degree;

  bool contains(const ExponentVector& u) const { return u.degree_on(vars) >= degree; }

  friend std::strong_ordering operator<=>(const DegreeFloor& a, const DegreeFloor& b);
  friend bool operator==(const DegreeFloor& a, const DegreeFloor& b) = default;
};

/// A monomial ideal of k[x1..xd] in normal form: a minimal generating set
/// plus symbolic degree floors.
///
/// Normal form: generators form an antichain, sorted descending in lex order
/// (so x^2 precedes x*y^2 precedes y^3); no generator lies in a floor; floors
/// are pairwise non-nested, have at least two variables and are not already
/// contained in the ideal of the generators. Single-variable floors become
/// pure-power generators. Equality is structural on this form, so an ideal
/// given by explicit generators and the same ideal given by a floor compare
/// unequal; use same_ideal() for semantic comparison.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(std::size_t dim);
  static MonomialIdeal unit(std::size_t dim);

  /// Normalizing constructor. Throws DimensionMismatch or PreconditionError
  /// (empty or out-of-range floor variables).
  static MonomialIdeal from_generators(std::size_t dim, std::vector<ExponentVector> gens,
                                       std::vector<DegreeFloor> floors = {});

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  const std::vector<DegreeFloor>& floors() const noexcept { return floors_; }

  bool is_zero() const noexcept { return gens_.empty() && floors_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }
  bool has_floors() const noexcept { return !floors_.empty(); }

  bool contains(const ExponentVector& u) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) = default;

 private:
  MonomialIdeal() = default;

  std::size_t dim_ = 0;
  std::vector<ExponentVector> gens_;
  std::vector<DegreeFloor> floors_;
};

/// Minimal elements of `raw` under divisibility. An empty input gives the zero ideal.
MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> raw);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, const Integer& k);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
/// {v : v + u in I}.
MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& u);
/// Intersection of colon(ideal, g) over the generators g of `by`.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);
MonomialIdeal radical(const MonomialIdeal& ideal);

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& u);
/// True iff `sub` is contained in `ideal`.
bool contains_ideal(const MonomialIdeal& ideal, const MonomialIdeal& sub);
bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b);

/// (x_j : j in vars)^n; `vars` defaults to all variables. n = 0 is the unit ideal.
MonomialIdeal m_power(std::size_t dim, const Integer& n,
                      std::optional<std::vector<std::size_t>> vars = std::nullopt);

/// All exponent vectors supported on floor.vars with floor.vars-degree exactly floor.degree.
std::vector<ExponentVector> floor_generators(std::size_t dim, const DegreeFloor& floor);

/// The same ideal with every floor expanded into explicit generators.
MonomialIdeal materialize(const MonomialIdeal& ideal);

/// Number of generators floor_generators() would produce.
Integer floor_generator_count(const DegreeFloor& floor);

}  // namespace monoclosure
