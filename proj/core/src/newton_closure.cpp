#include "monoclosure/newton_closure.hpp"

#include "monoclosure/errors.hpp"
#include "monoclosure/exact_lp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace monoclosure {

namespace {

// Largest box the closure scan agrees to walk.
constexpr double kBoxLimit = 5e8;

std::vector<ExponentVector> hull_columns(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> columns = ideal.generators();
  for (const auto& f : ideal.floors()) {
    for (std::size_t j : f.vars) columns.push_back(ExponentVector::unit(ideal.dim(), j, f.degree));
  }
  return columns;
}

// Rows 0..d-1: sum_i t_i alpha_i + q = beta. Row d: sum_i t_i = 1.
HullCertificate solve_hull(std::vector<ExponentVector> columns, const ExponentVector& beta) {
  const std::size_t d = beta.dim();
  const std::size_t r = columns.size();
  RationalMatrix a(d + 1, r + d);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(j, i) = Rational(columns[i][j]);
    a(d, i) = 1;
  }
  for (std::size_t j = 0; j < d; ++j) a(j, r + j) = 1;
  std::vector<Rational> b(d + 1);
  for (std::size_t j = 0; j < d; ++j) b[j] = Rational(beta[j]);
  b[d] = 1;

  LpFeasibility lp = find_feasible_point(a, b);
  HullCertificate cert{std::move(columns), ConvexWitness{}};
  if (lp.feasible) {
    ConvexWitness w;
    w.weights.assign(lp.point.begin(), lp.point.begin() + static_cast<std::ptrdiff_t>(r));
    w.slacks.assign(lp.point.begin() + static_cast<std::ptrdiff_t>(r), lp.point.end());
    cert.witness = std::move(w);
  } else {
    SeparatingFunctional s;
    s.normal.assign(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(d));
    s.level = -lp.farkas[d];
    cert.witness = std::move(s);
  }
  return cert;
}

using SmallVector = std::vector<std::int64_t>;

SmallVector to_small(const ExponentVector& v) {
  SmallVector out(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) {
    auto c = to_int64(v[j]);
    if (!c) throw std::length_error("exponent too large for closure enumeration");
    out[j] = *c;
  }
  return out;
}

bool small_divides(const SmallVector& a, const SmallVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

struct SmallFloor {
  std::vector<std::size_t> vars;
  std::int64_t degree;
};

}  // namespace

HullCertificate hull_membership(const MonomialIdeal& ideal, const ExponentVector& beta) {
  require_same_dim(ideal.dim(), beta.dim());
  if (ideal.is_zero()) throw PreconditionError("hull membership against the zero ideal");
  return solve_hull(hull_columns(ideal), beta);
}

bool certificate_valid(const HullCertificate& cert, const ExponentVector& beta) {
  const std::size_t d = beta.dim();
  for (const auto& c : cert.columns) {
    if (c.dim() != d) return false;
  }
  if (cert.feasible()) {
    const auto& w = cert.convex();
    if (w.weights.size() != cert.columns.size() || w.slacks.size() != d) return false;
    Rational total = 0;
    for (const auto& t : w.weights) {
      if (t < 0) return false;
      total += t;
    }
    if (total != 1) return false;
    for (std::size_t j = 0; j < d; ++j) {
      if (w.slacks[j] < 0) return false;
      Rational combo = w.slacks[j];
      for (std::size_t i = 0; i < cert.columns.size(); ++i) combo += w.weights[i] * Rational(cert.columns[i][j]);
      if (combo != Rational(beta[j])) return false;
    }
    return true;
  }
  const auto& s = cert.separator();
  if (s.normal.size() != d) return false;
  Rational at_beta = 0;
  for (std::size_t j = 0; j < d; ++j) {
    if (s.normal[j] < 0) return false;
    at_beta += s.normal[j] * Rational(beta[j]);
  }
  if (!(at_beta < s.level)) return false;
  for (const auto& c : cert.columns) {
    Rational at_column = 0;
    for (std::size_t j = 0; j < d; ++j) at_column += s.normal[j] * Rational(c[j]);
    if (at_column < s.level) return false;
  }
  return true;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  const std::size_t d = ideal.dim();
  if (ideal.is_zero() || ideal.is_unit()) return ideal;

  const auto columns = hull_columns(ideal);
  std::vector<SmallVector> gens;
  for (const auto& g : ideal.generators()) gens.push_back(to_small(g));
  std::vector<SmallFloor> floors;
  for (const auto& f : ideal.floors()) {
    auto deg = to_int64(f.degree);
    if (!deg) throw std::length_error("floor degree too large for closure enumeration");
    floors.push_back(SmallFloor{f.vars, *deg});
  }

  // Minimal lattice points of the polyhedron never exceed the vertices'
  // coordinatewise maximum: lowering an excess coordinate stays inside.
  SmallVector bound(d, 0);
  for (const auto& c : columns) {
    const auto small = to_small(c);
    for (std::size_t j = 0; j < d; ++j) bound[j] = std::max(bound[j], small[j]);
  }
  double volume = 1;
  std::int64_t max_degree = 0;
  for (auto b : bound) {
    volume *= static_cast<double>(b + 1);
    max_degree += b;
  }
  if (volume > kBoxLimit) throw std::length_error("closure box too large");

  auto in_ideal = [&](const SmallVector& beta) {
    for (const auto& g : gens) {
      if (small_divides(g, beta)) return true;
    }
    for (const auto& f : floors) {
      std::int64_t s = 0;
      for (std::size_t j : f.vars) s += beta[j];
      if (s >= f.degree) return true;
    }
    return false;
  };

  std::vector<SmallVector> accepted;
  SmallVector beta(d, 0);
  // Lex order within one total degree: fill coordinates left to right,
  // largest value first.
  auto visit_degree = [&](std::int64_t degree) {
    std::vector<std::int64_t> suffix_cap(d + 1, 0);
    for (std::size_t j = d; j-- > 0;) suffix_cap[j] = suffix_cap[j + 1] + bound[j];
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
      if (pos + 1 == d) {
        if (left > bound[pos]) return;
        beta[pos] = left;
        const bool pruned = std::any_of(accepted.begin(), accepted.end(),
                                        [&](const SmallVector& a) { return small_divides(a, beta); });
        if (!pruned) {
          bool member = in_ideal(beta);
          if (!member) {
            std::vector<Integer> coords(beta.begin(), beta.end());
            member = solve_hull(columns, ExponentVector(std::move(coords))).feasible();
          }
          if (member) accepted.push_back(beta);
        }
        beta[pos] = 0;
        return;
      }
      const std::int64_t hi = std::min(left, bound[pos]);
      const std::int64_t lo = std::max<std::int64_t>(0, left - suffix_cap[pos + 1]);
      for (std::int64_t v = hi; v >= lo; --v) {
        beta[pos] = v;
        self(self, pos + 1, left - v);
      }
      beta[pos] = 0;
    };
    rec(rec, 0, degree);
  };
  for (std::int64_t degree = 0; degree <= max_degree; ++degree) visit_degree(degree);

  std::vector<ExponentVector> result;
  result.reserve(accepted.size());
  for (const auto& a : accepted) result.emplace_back(std::vector<Integer>(a.begin(), a.end()));
  return minimalize(d, std::move(result));
}

bool is_integrally_closed(const MonomialIdeal& ideal) {
  return integral_closure(ideal) == materialize(ideal);
}

}  // namespace monoclosure
