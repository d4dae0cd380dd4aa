#include "monoclosure/monomial_ideal.hpp"

#include "monoclosure/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace monoclosure {

namespace {

// Expanding a floor past this many generators is refused.
constexpr std::size_t kMaterializeLimit = 4'000'000;

// Floors whose expansion is larger than this are never checked for
// redundancy against the explicit generators during normalization.
constexpr std::size_t kRedundancyCheckLimit = 200'000;

bool descending_lex(const ExponentVector& a, const ExponentVector& b) { return b < a; }

// Keeps the minimal elements; the result is in descending lex order.
std::vector<ExponentVector> antichain(std::vector<ExponentVector> raw) {
  std::sort(raw.begin(), raw.end(), graded_lex_less);
  std::vector<ExponentVector> kept;
  for (auto& v : raw) {
    const bool dominated = std::any_of(kept.begin(), kept.end(),
                                       [&](const ExponentVector& g) { return g.divides(v); });
    if (!dominated) kept.push_back(std::move(v));
  }
  std::sort(kept.begin(), kept.end(), descending_lex);
  return kept;
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// (a.vars)^a.degree is inside (b.vars)^b.degree.
bool floor_nested(const DegreeFloor& a, const DegreeFloor& b) {
  return is_subset(a.vars, b.vars) && a.degree >= b.degree;
}

bool divisible_by_any(const std::vector<ExponentVector>& gens, const ExponentVector& u) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const ExponentVector& g) { return g.divides(u); });
}

// Every generator of the floor is divisible by one of `gens`.
bool floor_inside_generators(std::size_t dim, const DegreeFloor& floor,
                             const std::vector<ExponentVector>& gens) {
  // Necessary: each pure power degree * e_j must be covered.
  for (std::size_t j : floor.vars) {
    if (!divisible_by_any(gens, ExponentVector::unit(dim, j, floor.degree))) return false;
  }
  if (floor_generator_count(floor) > kRedundancyCheckLimit) return false;
  const auto expanded = floor_generators(dim, floor);
  return std::all_of(expanded.begin(), expanded.end(),
                     [&](const ExponentVector& u) { return divisible_by_any(gens, u); });
}

bool is_pure_floor(const MonomialIdeal& ideal) {
  return ideal.generators().empty() && ideal.floors().size() == 1;
}

}  // namespace

std::strong_ordering operator<=>(const DegreeFloor& a, const DegreeFloor& b) {
  if (auto c = a.vars <=> b.vars; c != 0) return c;
  if (a.degree < b.degree) return std::strong_ordering::less;
  if (a.degree > b.degree) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

MonomialIdeal MonomialIdeal::zero(std::size_t dim) {
  MonomialIdeal out;
  out.dim_ = dim;
  return out;
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  MonomialIdeal out;
  out.dim_ = dim;
  out.gens_.emplace_back(dim);
  return out;
}

MonomialIdeal MonomialIdeal::from_generators(std::size_t dim, std::vector<ExponentVector> gens,
                                             std::vector<DegreeFloor> floors) {
  for (const auto& g : gens) require_same_dim(dim, g.dim());

  std::vector<DegreeFloor> kept_floors;
  for (auto& f : floors) {
    if (f.vars.empty()) throw PreconditionError("degree floor over an empty variable set");
    std::sort(f.vars.begin(), f.vars.end());
    f.vars.erase(std::unique(f.vars.begin(), f.vars.end()), f.vars.end());
    if (f.vars.back() >= dim) {
      throw PreconditionError("degree floor variable index " + std::to_string(f.vars.back() + 1) +
                              " exceeds dimension " + std::to_string(dim));
    }
    if (f.degree < 0) throw PreconditionError("degree floor with negative degree");
    if (f.degree == 0) return unit(dim);
    if (f.vars.size() == 1) {
      gens.push_back(ExponentVector::unit(dim, f.vars.front(), f.degree));
    } else {
      kept_floors.push_back(std::move(f));
    }
  }

  // Drop floors nested inside another floor; of equal floors keep one.
  std::sort(kept_floors.begin(), kept_floors.end());
  kept_floors.erase(std::unique(kept_floors.begin(), kept_floors.end()), kept_floors.end());
  std::vector<DegreeFloor> outer;
  for (std::size_t i = 0; i < kept_floors.size(); ++i) {
    bool nested = false;
    for (std::size_t j = 0; j < kept_floors.size() && !nested; ++j) {
      nested = i != j && floor_nested(kept_floors[i], kept_floors[j]);
    }
    if (!nested) outer.push_back(kept_floors[i]);
  }

  MonomialIdeal out;
  out.dim_ = dim;
  auto minimal = antichain(std::move(gens));
  for (auto& f : outer) {
    if (!floor_inside_generators(dim, f, minimal)) out.floors_.push_back(std::move(f));
  }
  for (auto& g : minimal) {
    const bool absorbed = std::any_of(out.floors_.begin(), out.floors_.end(),
                                      [&](const DegreeFloor& f) { return f.contains(g); });
    if (!absorbed) out.gens_.push_back(std::move(g));
  }
  return out;
}

bool MonomialIdeal::contains(const ExponentVector& u) const {
  require_same_dim(dim_, u.dim());
  if (divisible_by_any(gens_, u)) return true;
  return std::any_of(floors_.begin(), floors_.end(),
                     [&](const DegreeFloor& f) { return f.contains(u); });
}

MonomialIdeal minimalize(std::size_t dim, std::vector<ExponentVector> raw) {
  return MonomialIdeal::from_generators(dim, std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  std::vector<DegreeFloor> floors = a.floors();
  floors.insert(floors.end(), b.floors().begin(), b.floors().end());
  return MonomialIdeal::from_generators(a.dim(), std::move(gens), std::move(floors));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (is_pure_floor(a) && is_pure_floor(b) && a.floors()[0].vars == b.floors()[0].vars) {
    return MonomialIdeal::from_generators(
        a.dim(), {}, {DegreeFloor{a.floors()[0].vars, a.floors()[0].degree + b.floors()[0].degree}});
  }
  const auto ga = materialize(a).generators();
  const auto gb = materialize(b).generators();
  std::vector<ExponentVector> prods;
  prods.reserve(ga.size() * gb.size());
  for (const auto& x : ga) {
    for (const auto& y : gb) prods.push_back(x + y);
  }
  return minimalize(a.dim(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& a, const Integer& k) {
  if (k < 0) throw PreconditionError("negative ideal power");
  if (k == 0) return MonomialIdeal::unit(a.dim());
  if (a.is_zero() || a.is_unit() || k == 1) return a;
  if (is_pure_floor(a)) {
    return MonomialIdeal::from_generators(a.dim(), {},
                                          {DegreeFloor{a.floors()[0].vars, a.floors()[0].degree * k}});
  }
  MonomialIdeal base = materialize(a);
  MonomialIdeal result = MonomialIdeal::unit(a.dim());
  Integer e = k;
  while (true) {
    if ((e & 1) != 0) result = product(result, base);
    e >>= 1;
    if (e == 0) break;
    base = product(base, base);
  }
  return result;
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a.dim(), b.dim());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (is_pure_floor(a) && is_pure_floor(b) && a.floors()[0].vars == b.floors()[0].vars) {
    return a.floors()[0].degree >= b.floors()[0].degree ? a : b;
  }
  const auto ga = materialize(a).generators();
  const auto gb = materialize(b).generators();
  std::vector<ExponentVector> lcms;
  lcms.reserve(ga.size() * gb.size());
  for (const auto& x : ga) {
    for (const auto& y : gb) lcms.push_back(lcm(x, y));
  }
  return minimalize(a.dim(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& u) {
  require_same_dim(ideal.dim(), u.dim());
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) gens.push_back(quotient(g, u));
  std::vector<DegreeFloor> floors;
  for (const auto& f : ideal.floors()) {
    Integer rest = f.degree - u.degree_on(f.vars);
    floors.push_back(DegreeFloor{f.vars, rest > 0 ? rest : Integer(0)});
  }
  return MonomialIdeal::from_generators(ideal.dim(), std::move(gens), std::move(floors));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_dim(ideal.dim(), by.dim());
  MonomialIdeal result = MonomialIdeal::unit(ideal.dim());
  const MonomialIdeal divisors = materialize(by);
  for (const auto& g : divisors.generators()) {
    result = intersection(result, colon(ideal, g));
  }
  return result;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(support(g));
  // rad((x_S)^n) = (x_S), kept symbolic.
  std::vector<DegreeFloor> floors;
  for (const auto& f : ideal.floors()) floors.push_back(DegreeFloor{f.vars, 1});
  return MonomialIdeal::from_generators(ideal.dim(), std::move(gens), std::move(floors));
}

bool contains_monomial(const MonomialIdeal& ideal, const ExponentVector& u) {
  return ideal.contains(u);
}

bool contains_ideal(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
  require_same_dim(ideal.dim(), sub.dim());
  for (const auto& g : sub.generators()) {
    if (!ideal.contains(g)) return false;
  }
  for (const auto& f : sub.floors()) {
    const bool covered = std::any_of(ideal.floors().begin(), ideal.floors().end(),
                                     [&](const DegreeFloor& big) { return floor_nested(f, big); });
    if (covered) continue;
    for (const auto& g : floor_generators(sub.dim(), f)) {
      if (!ideal.contains(g)) return false;
    }
  }
  return true;
}

bool same_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return contains_ideal(a, b) && contains_ideal(b, a);
}

MonomialIdeal m_power(std::size_t dim, const Integer& n, std::optional<std::vector<std::size_t>> vars) {
  if (n < 0) throw PreconditionError("negative power of the maximal ideal");
  std::vector<std::size_t> s;
  if (vars) {
    s = std::move(*vars);
  } else {
    s.resize(dim);
    for (std::size_t j = 0; j < dim; ++j) s[j] = j;
  }
  if (n == 0) return MonomialIdeal::unit(dim);
  if (s.empty()) throw PreconditionError("m_power over an empty variable set with n > 0");
  return MonomialIdeal::from_generators(dim, {}, {DegreeFloor{std::move(s), n}});
}

Integer floor_generator_count(const DegreeFloor& floor) {
  // C(n + s - 1, s - 1)
  const std::size_t s = floor.vars.size();
  if (s == 0) return floor.degree == 0 ? 1 : 0;
  Integer count = 1;
  for (std::size_t i = 1; i < s; ++i) {
    count *= floor.degree + i;
    count /= i;
  }
  return count;
}

std::vector<ExponentVector> floor_generators(std::size_t dim, const DegreeFloor& floor) {
  for (std::size_t j : floor.vars) {
    if (j >= dim) throw PreconditionError("degree floor variable out of range");
  }
  if (floor_generator_count(floor) > kMaterializeLimit) {
    throw std::length_error("degree floor too large to materialize");
  }
  std::vector<ExponentVector> out;
  if (floor.vars.empty()) return out;
  std::vector<Integer> coords(dim, Integer(0));
  const std::function<void(std::size_t, Integer)> fill = [&](std::size_t pos, Integer left) {
    const std::size_t var = floor.vars[pos];
    if (pos + 1 == floor.vars.size()) {
      coords[var] = left;
      out.emplace_back(coords);
      coords[var] = 0;
      return;
    }
    for (Integer e = left; e >= 0; --e) {
      coords[var] = e;
      fill(pos + 1, left - e);
    }
    coords[var] = 0;
  };
  fill(0, floor.degree);
  return out;
}

MonomialIdeal materialize(const MonomialIdeal& ideal) {
  if (!ideal.has_floors()) return ideal;
  std::vector<ExponentVector> gens = ideal.generators();
  for (const auto& f : ideal.floors()) {
    auto extra = floor_generators(ideal.dim(), f);
    gens.insert(gens.end(), std::make_move_iterator(extra.begin()),
                std::make_move_iterator(extra.end()));
  }
  return minimalize(ideal.dim(), std::move(gens));
}

}  // namespace monoclosure
