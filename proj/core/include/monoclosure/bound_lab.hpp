#pragma once

#include "monoclosure/monomial_ideal.hpp"
#include "monoclosure/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monoclosure {

/// A growth value: a nonnegative integer or the explicit "no bound needed"
/// state (the closure of I + J^n already sits inside the closure of I).
class GrowthValue {
 public:
  enum class Kind { finite, infinite };

  static GrowthValue finite(Integer v) { return GrowthValue(Kind::finite, std::move(v)); }
  static GrowthValue infinite() { return GrowthValue(Kind::infinite, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_infinite() const noexcept { return kind_ == Kind::infinite; }
  /// Only meaningful when finite.
  const Integer& value() const noexcept { return value_; }

  bool at_least(const Integer& bound) const { return is_infinite() || value_ >= bound; }

  /// Decimal value, or "inf".
  std::string str() const { return is_infinite() ? "inf" : value_.str(); }

  friend bool operator==(const GrowthValue& a, const GrowthValue& b) {
    return a.kind_ == b.kind_ && (a.is_infinite() || a.value_ == b.value_);
  }

 private:
  GrowthValue(Kind kind, Integer v) : kind_(kind), value_(std::move(v)) {}
  Kind kind_;
  Integer value_;
};

/// Largest k with g in J^k. J must be proper and nonzero.
Integer ideal_order(const MonomialIdeal& modulus, const ExponentVector& g);

struct GrowthPoint {
  GrowthValue f = GrowthValue::infinite();
  /// A generator of the closure of I + J^n outside the closure of I with
  /// J-order exactly f; absent when f is infinite.
  std::optional<ExponentVector> witness;
};

/// Largest k with closure(I + J^n) inside closure(I) + J^k.
/// Throws PreconditionError when J is zero or the unit ideal, or n < 1.
GrowthValue f_max(const MonomialIdeal& ideal, const MonomialIdeal& modulus, std::int64_t n);

/// f_max with the escaping generator, reusing a precomputed closure of I.
GrowthPoint f_max_point(const MonomialIdeal& ideal, const MonomialIdeal& closure_of_ideal,
                        const MonomialIdeal& modulus, std::int64_t n);

struct GrowthRow {
  std::int64_t n = 0;
  GrowthPoint point;
  std::optional<std::int64_t> floor_n_over_c;  // present iff a constant was claimed
  std::optional<bool> verified;
};

struct GrowthReport {
  MonomialIdeal ideal;
  MonomialIdeal modulus;
  std::vector<GrowthRow> rows;
  std::optional<std::int64_t> claimed_c;
  /// Smallest c >= 1 with floor(n/c) <= f(n) on every row. Empirical over the
  /// tested range only.
  std::int64_t empirical_c = 1;

  bool all_verified() const;
};

/// Smallest c >= 1 with floor(n / c) <= f. Infinite f gives 1.
std::int64_t smallest_constant(std::int64_t n, const GrowthValue& f);

/// Rows for n_from..n_to. Rows are independent and may be spread over
/// `workers` threads; the report is always in n order.
GrowthReport growth_report(const MonomialIdeal& ideal, const MonomialIdeal& modulus,
                           std::int64_t n_from, std::int64_t n_to,
                           std::optional<std::int64_t> claimed_c = std::nullopt,
                           std::size_t workers = 1);

struct IntersectionLemmaRow {
  std::int64_t n = 0;
  GrowthValue f = GrowthValue::infinite();  // growth of J ∩ K
  std::int64_t factor_exponent = 0;         // floor(n / c0), c0 = max(c_J, c_K)
  std::int64_t lemma_exponent = 0;          // max(floor(n / c0) - offset, 0)
  bool inside_factor_sums = false;          // closure(I + m^n) ⊆ (J + m^p) ∩ (K + m^p)
  bool inside_lemma_bound = false;          // closure(I + m^n) ⊆ I + m^lemma_exponent
};

struct IntersectionLemmaReport {
  MonomialIdeal intersection;
  std::int64_t c_first = 1;
  std::int64_t c_second = 1;
  /// Least offset o with m^p ∩ (J + K) ⊆ m^(p - o) (J + K) on the tested p.
  std::int64_t artin_rees_offset = 0;
  /// Empirical constant of J ∩ K measured directly.
  std::int64_t smallest_c = 1;
  std::vector<IntersectionLemmaRow> rows;

  bool holds() const;
};

/// Throws PreconditionError unless both inputs are integrally closed.
IntersectionLemmaReport verify_intersection_lemma(const MonomialIdeal& first, const MonomialIdeal& second,
                                                  std::int64_t n_from, std::int64_t n_to,
                                                  std::size_t workers = 1);

struct RadicalSwapRow {
  std::int64_t n = 0;
  GrowthValue f = GrowthValue::infinite();  // modulus rad(J)
  GrowthValue g = GrowthValue::infinite();  // modulus J
  GrowthValue g_at_n_over_k = GrowthValue::infinite();
  bool forward_chain = false;   // closure(I+J^n) ⊆ closure(I+K^n), g(n) >= floor(f(n)/k)
  bool backward_chain = false;  // closure(I+K^n) ⊆ closure(I+J^[n/k]), f(n) >= g(floor(n/k))
};

struct RadicalSwapReport {
  MonomialIdeal radical_of_modulus;
  std::int64_t k = 1;  // least k with rad(J)^k ⊆ J
  std::int64_t f_rate = 1;
  std::int64_t g_rate = 1;
  std::vector<RadicalSwapRow> rows;

  bool holds() const;
};

RadicalSwapReport verify_radical_swap(const MonomialIdeal& ideal, const MonomialIdeal& modulus,
                                      std::int64_t n_from, std::int64_t n_to, std::size_t workers = 1);

/// x*y^(n/2) lies in the closure of (x^2) + m^n but not in
/// (x^2, x*y^(n-k-1), y^(n-k)). Requires even n >= 4, k >= 0, n - k - 1 > n/2.
bool counterexample_check(std::int64_t n_even, std::int64_t k);

/// a_1 * ... * a_s for I = (x_{j1}^a_1, ..., x_{js}^a_s) over distinct
/// variables (t for a principal x_j^t); nullopt otherwise.
std::optional<Integer> pure_power_constant(const MonomialIdeal& ideal);

/// n - f(n) per row, nullopt where f is infinite.
std::vector<std::optional<Integer>> additive_gaps(const GrowthReport& report);

/// The gap sequence is non-increasing, or never exceeds its last value.
bool gaps_bounded(const std::vector<std::optional<Integer>>& gaps);

}  // namespace monoclosure
