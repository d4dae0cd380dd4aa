#include "monoclosure/exact_lp.hpp"

#include "monoclosure/errors.hpp"

namespace monoclosure {

// Tableau layout: columns [0, n) are the structural variables, [n, n + m)
// one artificial per row, and the last column is the right-hand side. Row m
// holds reduced costs of the phase-one objective (sum of artificials) with
// the negated objective value in its last entry.
LpFeasibility find_feasible_point(const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw DimensionMismatch(m, b.size());

  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  RationalMatrix t(m + 1, width);
  std::vector<int> sign(m, 1);
  std::vector<std::size_t> basis(m);

  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0) sign[r] = -1;
    for (std::size_t c = 0; c < n; ++c) t(r, c) = sign[r] < 0 ? Rational(-a(r, c)) : a(r, c);
    t(r, n + r) = 1;
    t(r, rhs) = sign[r] < 0 ? Rational(-b[r]) : b[r];
    basis[r] = n + r;
  }
  for (std::size_t c = 0; c < n; ++c) {
    Rational total = 0;
    for (std::size_t r = 0; r < m; ++r) total += t(r, c);
    t(m, c) = -total;
  }
  {
    Rational total = 0;
    for (std::size_t r = 0; r < m; ++r) total += t(r, rhs);
    t(m, rhs) = -total;
  }

  LpFeasibility out;
  while (true) {
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t c = 0; c < rhs; ++c) {
      if (t(m, c) < 0) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;

    // Ratio test, ties broken by the lowest basic variable index.
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t(r, enter) <= 0) continue;
      Rational ratio = t(r, rhs) / t(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    // The phase-one objective is bounded below by zero.
    if (leave == m) throw std::logic_error("phase-one simplex reported unbounded");

    const Rational pivot = t(leave, enter);
    for (std::size_t c = 0; c < width; ++c) t(leave, c) /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave || t(r, enter) == 0) continue;
      const Rational factor = t(r, enter);
      for (std::size_t c = 0; c < width; ++c) {
        if (t(leave, c) != 0) t(r, c) -= factor * t(leave, c);
      }
    }
    basis[leave] = enter;
    ++out.pivots;
  }

  const Rational objective = -t(m, rhs);
  if (objective == 0) {
    out.feasible = true;
    out.point.assign(n, Rational(0));
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < n) out.point[basis[r]] = t(r, rhs);
    }
    return out;
  }

  // Phase-one duals: reduced cost of artificial r is 1 - y_r. The Farkas
  // vector is -y, mapped back through the row negations.
  out.farkas.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const Rational y = Rational(1) - t(m, n + r);
    out.farkas[r] = sign[r] < 0 ? y : Rational(-y);
  }
  return out;
}

}  // namespace monoclosure
