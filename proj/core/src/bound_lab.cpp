#include "monoclosure/bound_lab.hpp"

#include "monoclosure/errors.hpp"
#include "monoclosure/newton_closure.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace monoclosure {

namespace {

void require_proper_modulus(const MonomialIdeal& modulus) {
  if (modulus.is_zero()) throw PreconditionError("modulus is the zero ideal");
  if (modulus.is_unit()) throw PreconditionError("modulus is the unit ideal");
}

void require_range(std::int64_t n_from, std::int64_t n_to) {
  if (n_from < 1 || n_to < n_from) {
    throw PreconditionError("n range must satisfy 1 <= from <= to");
  }
}

Integer min_generator_degree(const MonomialIdeal& ideal) {
  std::optional<Integer> best;
  for (const auto& g : ideal.generators()) {
    Integer deg = g.degree();
    if (!best || deg < *best) best = std::move(deg);
  }
  for (const auto& f : ideal.floors()) {
    if (!best || f.degree < *best) best = f.degree;
  }
  return best.value_or(Integer(0));
}

// Largest k with g in J^k, caching the powers of J between calls.
class OrderOracle {
 public:
  explicit OrderOracle(const MonomialIdeal& modulus)
      : modulus_(modulus), min_degree_(min_generator_degree(modulus)) {
    require_proper_modulus(modulus);
  }

  Integer order(const ExponentVector& g) {
    Integer lo = 0;                      // g in J^lo always
    Integer hi = g.degree() / min_degree_;  // g not in J^(hi+1)
    while (lo < hi) {
      Integer mid = (lo + hi + 1) / 2;
      if (power_of(mid).contains(g)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  }

 private:
  const MonomialIdeal& power_of(const Integer& k) {
    auto it = powers_.find(k);
    if (it == powers_.end()) it = powers_.emplace(k, power(modulus_, k)).first;
    return it->second;
  }

  const MonomialIdeal& modulus_;
  Integer min_degree_;
  std::map<Integer, MonomialIdeal> powers_;
};

GrowthPoint growth_from_closures(const MonomialIdeal& big_closure, const MonomialIdeal& closure_of_ideal,
                                 OrderOracle& oracle) {
  GrowthPoint out;
  for (const auto& g : big_closure.generators()) {
    if (closure_of_ideal.contains(g)) continue;
    Integer ord = oracle.order(g);
    if (out.f.is_infinite() || ord < out.f.value()) {
      out.f = GrowthValue::finite(std::move(ord));
      out.witness = g;
    }
  }
  return out;
}

MonomialIdeal closure_of_sum(const MonomialIdeal& ideal, const MonomialIdeal& modulus, std::int64_t n) {
  return integral_closure(sum(ideal, power(modulus, Integer(n))));
}

// floor(f / k) with inf / k = inf.
GrowthValue divide(const GrowthValue& f, std::int64_t k) {
  if (f.is_infinite()) return f;
  return GrowthValue::finite(f.value() / k);
}

// a >= b in the extended order.
bool covers(const GrowthValue& a, const GrowthValue& b) {
  if (a.is_infinite()) return true;
  if (b.is_infinite()) return false;
  return a.value() >= b.value();
}

std::int64_t empirical_constant(const std::vector<std::pair<std::int64_t, GrowthValue>>& rows) {
  std::int64_t c = 1;
  for (const auto& [n, f] : rows) c = std::max(c, smallest_constant(n, f));
  return c;
}

}  // namespace

Integer ideal_order(const MonomialIdeal& modulus, const ExponentVector& g) {
  require_same_dim(modulus.dim(), g.dim());
  OrderOracle oracle(modulus);
  return oracle.order(g);
}

GrowthPoint f_max_point(const MonomialIdeal& ideal, const MonomialIdeal& closure_of_ideal,
                        const MonomialIdeal& modulus, std::int64_t n) {
  require_same_dim(ideal.dim(), modulus.dim());
  require_proper_modulus(modulus);
  if (n < 1) throw PreconditionError("f_max requires n >= 1");
  OrderOracle oracle(modulus);
  return growth_from_closures(closure_of_sum(ideal, modulus, n), closure_of_ideal, oracle);
}

GrowthValue f_max(const MonomialIdeal& ideal, const MonomialIdeal& modulus, std::int64_t n) {
  require_same_dim(ideal.dim(), modulus.dim());
  require_proper_modulus(modulus);
  return f_max_point(ideal, integral_closure(ideal), modulus, n).f;
}

std::int64_t smallest_constant(std::int64_t n, const GrowthValue& f) {
  if (f.is_infinite()) return 1;
  // floor(n/c) <= f  <=>  c > n / (f + 1)
  const Integer c = Integer(n) / (f.value() + 1) + 1;
  return c.convert_to<std::int64_t>();
}

bool GrowthReport::all_verified() const {
  return std::all_of(rows.begin(), rows.end(), [](const GrowthRow& r) { return r.verified.value_or(true); });
}

GrowthReport growth_report(const MonomialIdeal& ideal, const MonomialIdeal& modulus,
                           std::int64_t n_from, std::int64_t n_to,
                           std::optional<std::int64_t> claimed_c, std::size_t workers) {
  require_same_dim(ideal.dim(), modulus.dim());
  require_proper_modulus(modulus);
  require_range(n_from, n_to);
  if (claimed_c && *claimed_c < 1) throw PreconditionError("claimed constant must be positive");

  const MonomialIdeal closed = integral_closure(ideal);
  GrowthReport report{ideal, modulus, {}, claimed_c, 1};
  report.rows.resize(static_cast<std::size_t>(n_to - n_from + 1));
  detail::parallel_for(report.rows.size(), workers, [&](std::size_t i) {
    GrowthRow& row = report.rows[i];
    row.n = n_from + static_cast<std::int64_t>(i);
    row.point = f_max_point(ideal, closed, modulus, row.n);
    if (claimed_c) {
      row.floor_n_over_c = row.n / *claimed_c;
      row.verified = row.point.f.at_least(Integer(*row.floor_n_over_c));
    }
  });
  std::vector<std::pair<std::int64_t, GrowthValue>> values;
  for (const auto& r : report.rows) values.emplace_back(r.n, r.point.f);
  report.empirical_c = empirical_constant(values);
  return report;
}

bool IntersectionLemmaReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const IntersectionLemmaRow& r) {
    return r.inside_factor_sums && r.inside_lemma_bound;
  });
}

IntersectionLemmaReport verify_intersection_lemma(const MonomialIdeal& first, const MonomialIdeal& second,
                                                  std::int64_t n_from, std::int64_t n_to,
                                                  std::size_t workers) {
  require_same_dim(first.dim(), second.dim());
  require_range(n_from, n_to);
  if (!is_integrally_closed(first) || !is_integrally_closed(second)) {
    throw PreconditionError("intersection lemma requires integrally closed ideals");
  }
  const std::size_t d = first.dim();
  const MonomialIdeal maximal = m_power(d, 1);

  IntersectionLemmaReport report{intersection(first, second), 1, 1, 0, 1, {}};
  report.c_first = growth_report(first, maximal, n_from, n_to, std::nullopt, workers).empirical_c;
  report.c_second = growth_report(second, maximal, n_from, n_to, std::nullopt, workers).empirical_c;
  const std::int64_t c0 = std::max(report.c_first, report.c_second);

  // Artin-Rees offset, by direct search over the exponents the rows use.
  const MonomialIdeal joint = sum(first, second);
  const std::int64_t top = n_to / c0;
  std::vector<MonomialIdeal> slices;  // m^p ∩ (J + K), p = 1..top
  for (std::int64_t p = 1; p <= top; ++p) slices.push_back(intersection(m_power(d, p), joint));
  std::int64_t offset = 0;
  for (; offset <= top; ++offset) {
    bool works = true;
    for (std::int64_t p = offset + 1; p <= top && works; ++p) {
      works = contains_ideal(product(m_power(d, p - offset), joint), slices[static_cast<std::size_t>(p - 1)]);
    }
    if (works) break;
  }
  report.artin_rees_offset = offset;

  const MonomialIdeal& meet = report.intersection;
  const MonomialIdeal closed = integral_closure(meet);
  report.rows.resize(static_cast<std::size_t>(n_to - n_from + 1));
  detail::parallel_for(report.rows.size(), workers, [&](std::size_t i) {
    IntersectionLemmaRow& row = report.rows[i];
    row.n = n_from + static_cast<std::int64_t>(i);
    const MonomialIdeal big = closure_of_sum(meet, maximal, row.n);
    OrderOracle oracle(maximal);
    row.f = growth_from_closures(big, closed, oracle).f;
    row.factor_exponent = row.n / c0;
    row.lemma_exponent = std::max<std::int64_t>(row.factor_exponent - offset, 0);
    const MonomialIdeal tail = m_power(d, row.factor_exponent);
    const MonomialIdeal around_first = sum(first, tail);
    const MonomialIdeal around_second = sum(second, tail);
    row.inside_factor_sums = std::all_of(big.generators().begin(), big.generators().end(),
                                         [&](const ExponentVector& g) {
                                           return around_first.contains(g) && around_second.contains(g);
                                         });
    row.inside_lemma_bound = contains_ideal(sum(meet, m_power(d, row.lemma_exponent)), big);
  });
  std::vector<std::pair<std::int64_t, GrowthValue>> values;
  for (const auto& r : report.rows) values.emplace_back(r.n, r.f);
  report.smallest_c = empirical_constant(values);
  return report;
}

bool RadicalSwapReport::holds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RadicalSwapRow& r) { return r.forward_chain && r.backward_chain; });
}

RadicalSwapReport verify_radical_swap(const MonomialIdeal& ideal, const MonomialIdeal& modulus,
                                      std::int64_t n_from, std::int64_t n_to, std::size_t workers) {
  require_same_dim(ideal.dim(), modulus.dim());
  require_proper_modulus(modulus);
  require_range(n_from, n_to);

  RadicalSwapReport report{radical(modulus), 1, 1, 1, {}};
  const MonomialIdeal& rad = report.radical_of_modulus;
  constexpr std::int64_t kMaxPower = 4096;
  while (!contains_ideal(modulus, power(rad, Integer(report.k)))) {
    if (++report.k > kMaxPower) throw std::length_error("no power of the radical found inside the modulus");
  }
  const std::int64_t k = report.k;

  // Closures needed: I + K^n for n in range; I + J^n for n in range and n/k.
  std::set<std::int64_t> j_needed;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    j_needed.insert(n);
    if (n / k >= 1) j_needed.insert(n / k);
  }
  struct Job {
    bool radical_modulus;
    std::int64_t n;
    MonomialIdeal closure = MonomialIdeal::zero(0);
    GrowthValue value = GrowthValue::infinite();
  };
  std::vector<Job> jobs;
  for (std::int64_t n = n_from; n <= n_to; ++n) jobs.push_back(Job{true, n});
  for (std::int64_t n : j_needed) jobs.push_back(Job{false, n});

  const MonomialIdeal closed = integral_closure(ideal);
  detail::parallel_for(jobs.size(), workers, [&](std::size_t i) {
    Job& job = jobs[i];
    const MonomialIdeal& mod = job.radical_modulus ? rad : modulus;
    OrderOracle oracle(mod);
    job.closure = closure_of_sum(ideal, mod, job.n);
    job.value = growth_from_closures(job.closure, closed, oracle).f;
  });
  std::map<std::int64_t, const Job*> by_rad;
  std::map<std::int64_t, const Job*> by_mod;
  for (const auto& job : jobs) (job.radical_modulus ? by_rad : by_mod)[job.n] = &job;

  std::vector<std::pair<std::int64_t, GrowthValue>> f_values;
  std::vector<std::pair<std::int64_t, GrowthValue>> g_values;
  for (std::int64_t n = n_from; n <= n_to; ++n) {
    const Job& f_job = *by_rad.at(n);
    const Job& g_job = *by_mod.at(n);
    RadicalSwapRow row;
    row.n = n;
    row.f = f_job.value;
    row.g = g_job.value;
    row.forward_chain = contains_ideal(f_job.closure, g_job.closure) && covers(row.g, divide(row.f, k));
    const std::int64_t q = n / k;
    if (q == 0) {
      // J^0 is the unit ideal: the chain is trivially satisfied.
      row.g_at_n_over_k = GrowthValue::finite(0);
      row.backward_chain = true;
    } else {
      const Job& q_job = *by_mod.at(q);
      row.g_at_n_over_k = q_job.value;
      row.backward_chain = contains_ideal(q_job.closure, f_job.closure) && covers(row.f, q_job.value);
    }
    f_values.emplace_back(n, row.f);
    g_values.emplace_back(n, row.g);
    report.rows.push_back(std::move(row));
  }
  report.f_rate = empirical_constant(f_values);
  report.g_rate = empirical_constant(g_values);
  return report;
}

bool counterexample_check(std::int64_t n_even, std::int64_t k) {
  if (n_even < 4 || n_even % 2 != 0) throw PreconditionError("counterexample needs an even n >= 4");
  if (k < 0) throw PreconditionError("counterexample needs k >= 0");
  const std::int64_t half = n_even / 2;
  if (n_even - k - 1 <= half) throw PreconditionError("counterexample needs n - k - 1 > n/2");

  const auto x_squared = MonomialIdeal::from_generators(2, {ExponentVector{2, 0}});
  const ExponentVector probe{1, half};
  const bool in_closure = hull_membership(sum(x_squared, m_power(2, n_even)), probe).feasible();
  const auto shifted = MonomialIdeal::from_generators(
      2, {ExponentVector{2, 0}, ExponentVector{1, n_even - k - 1}, ExponentVector{0, n_even - k}});
  return in_closure && !shifted.contains(probe);
}

std::optional<Integer> pure_power_constant(const MonomialIdeal& ideal) {
  if (ideal.has_floors() || ideal.generators().empty()) return std::nullopt;
  Integer c = 1;
  for (const auto& g : ideal.generators()) {
    std::size_t nonzero = 0;
    for (const auto& e : g.coords()) {
      if (e != 0) {
        ++nonzero;
        c *= e;
      }
    }
    if (nonzero != 1) return std::nullopt;
  }
  return c;
}

std::vector<std::optional<Integer>> additive_gaps(const GrowthReport& report) {
  std::vector<std::optional<Integer>> gaps;
  for (const auto& row : report.rows) {
    if (row.point.f.is_infinite()) {
      gaps.emplace_back(std::nullopt);
    } else {
      gaps.emplace_back(Integer(row.n) - row.point.f.value());
    }
  }
  return gaps;
}

bool gaps_bounded(const std::vector<std::optional<Integer>>& gaps) {
  std::vector<Integer> finite;
  for (const auto& g : gaps) {
    if (g) finite.push_back(*g);
  }
  if (finite.empty()) return true;
  const bool non_increasing = std::is_sorted(finite.rbegin(), finite.rend());
  const Integer peak = *std::max_element(finite.begin(), finite.end());
  return non_increasing || peak <= finite.back();
}

}  // namespace monoclosure
