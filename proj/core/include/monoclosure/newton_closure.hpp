#pragma once

#include "monoclosure/monomial_ideal.hpp"
#include "monoclosure/numeric.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace monoclosure {

/// beta = sum_i weights[i] * columns[i] + slacks, weights summing to one.
struct ConvexWitness {
  std::vector<Rational> weights;
  std::vector<Rational> slacks;
};

/// A functional w >= 0 and level lambda with <w, beta> < lambda <= <w, column>
/// for every column: beta lies strictly below a supporting hyperplane of the
/// Newton polyhedron.
struct SeparatingFunctional {
  std::vector<Rational> normal;
  Rational level;
};

/// Exact answer to "is x^beta in the integral closure of I?".
///
/// `columns` are the points the LP was posed over: the generators of I in
/// normal-form order, followed by degree * e_j for each floor and each of its
/// variables (j ascending within a floor).
struct HullCertificate {
  std::vector<ExponentVector> columns;
  std::variant<ConvexWitness, SeparatingFunctional> witness;

  bool feasible() const noexcept { return std::holds_alternative<ConvexWitness>(witness); }
  const ConvexWitness& convex() const { return std::get<ConvexWitness>(witness); }
  const SeparatingFunctional& separator() const { return std::get<SeparatingFunctional>(witness); }
};

/// Decides beta against the Newton polyhedron of `ideal` by exact LP
/// feasibility. Throws PreconditionError for the zero ideal.
HullCertificate hull_membership(const MonomialIdeal& ideal, const ExponentVector& beta);

/// Re-checks a certificate in exact arithmetic, independently of the solver.
bool certificate_valid(const HullCertificate& cert, const ExponentVector& beta);

/// u^k in I^k: `factors` lists k generators of I (with repetition) whose sum
/// is componentwise at most k * beta.
struct PowerWitness {
  std::size_t k = 0;
  std::vector<ExponentVector> factors;
};

/// Least k <= k_max admitting a witness, or nullopt. nullopt does not prove
/// non-membership in the closure. Floors are expanded to generators.
std::optional<PowerWitness> power_witness(const MonomialIdeal& ideal, const ExponentVector& beta,
                                          std::size_t k_max);

bool power_witness_valid(const MonomialIdeal& ideal, const ExponentVector& beta,
                         const PowerWitness& witness);

/// Minimal generators of the integral closure, found by scanning the box
/// below the componentwise maximum of the polyhedron's vertices in graded
/// lex order. Floors are used through their vertices only. The result never
/// carries floors. Zero maps to zero, unit to unit.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

/// integral_closure(I) equals I once I's floors are expanded.
bool is_integrally_closed(const MonomialIdeal& ideal);

}  // namespace monoclosure
