#include "monoclosure/newton_closure.hpp"

#include "monoclosure/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace monoclosure {

namespace {

// Depth-first search for generator counts c_i with sum c_i = k and
// sum c_i * alpha_i <= k * beta, choosing counts generator by generator.
template <class T>
class MultisetSearch {
 public:
  MultisetSearch(std::vector<std::vector<T>> gens, std::vector<T> beta)
      : gens_(std::move(gens)), beta_(std::move(beta)), counts_(gens_.size(), 0) {
    const std::size_t r = gens_.size();
    const std::size_t d = beta_.size();
    suffix_min_.assign(r + 1, std::vector<T>(d, T(0)));
    for (std::size_t i = r; i-- > 0;) {
      for (std::size_t j = 0; j < d; ++j) {
        suffix_min_[i][j] = i + 1 == r ? gens_[i][j] : std::min(gens_[i][j], suffix_min_[i + 1][j]);
      }
    }
  }

  bool run(std::size_t k) {
    std::fill(counts_.begin(), counts_.end(), 0);
    std::vector<T> budget(beta_.size());
    for (std::size_t j = 0; j < beta_.size(); ++j) budget[j] = beta_[j] * T(k);
    return descend(0, T(k), budget);
  }

  const std::vector<std::size_t>& counts() const { return counts_; }

 private:
  bool descend(std::size_t i, T remaining, std::vector<T>& budget) {
    if (remaining == 0) return true;
    if (i == gens_.size()) return false;
    const auto& lower = suffix_min_[i];
    for (std::size_t j = 0; j < budget.size(); ++j) {
      if (remaining * lower[j] > budget[j]) return false;
    }
    const auto& g = gens_[i];
    if (i + 1 == gens_.size()) {
      // The bound above already checked remaining * g <= budget.
      counts_[i] = static_cast<std::size_t>(remaining);
      return true;
    }
    T top = remaining;
    for (std::size_t j = 0; j < budget.size(); ++j) {
      if (g[j] > 0) top = std::min(top, T(budget[j] / g[j]));
    }
    for (T c = top; c >= 0; --c) {
      for (std::size_t j = 0; j < budget.size(); ++j) budget[j] -= c * g[j];
      counts_[i] = static_cast<std::size_t>(c);
      const bool found = descend(i + 1, remaining - c, budget);
      for (std::size_t j = 0; j < budget.size(); ++j) budget[j] += c * g[j];
      if (found) return true;
    }
    counts_[i] = 0;
    return false;
  }

  std::vector<std::vector<T>> gens_;
  std::vector<T> beta_;
  std::vector<std::vector<T>> suffix_min_;
  std::vector<std::size_t> counts_;
};

template <class T, class Convert>
std::optional<std::vector<std::size_t>> search_counts(const std::vector<ExponentVector>& gens,
                                                      const ExponentVector& beta,
                                                      const std::vector<std::size_t>& coords,
                                                      std::size_t k_max, Convert convert) {
  std::vector<std::vector<T>> g(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j : coords) g[i].push_back(convert(gens[i][j]));
  }
  std::vector<T> b;
  for (std::size_t j : coords) b.push_back(convert(beta[j]));
  MultisetSearch<T> search(std::move(g), std::move(b));
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (search.run(k)) {
      auto counts = search.counts();
      return counts;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PowerWitness> power_witness(const MonomialIdeal& ideal, const ExponentVector& beta,
                                          std::size_t k_max) {
  require_same_dim(ideal.dim(), beta.dim());
  if (ideal.is_zero() || k_max == 0) return std::nullopt;
  const auto gens = materialize(ideal).generators();

  for (const auto& g : gens) {
    if (g.divides(beta)) return PowerWitness{1, {g}};
  }

  // Coordinates no generator exceeds never bind.
  std::vector<std::size_t> coords;
  Integer largest = 0;
  for (std::size_t j = 0; j < beta.dim(); ++j) {
    bool binds = false;
    for (const auto& g : gens) {
      if (g[j] > beta[j]) binds = true;
      largest = std::max(largest, g[j]);
    }
    if (binds) coords.push_back(j);
    largest = std::max(largest, beta[j]);
  }

  std::optional<std::vector<std::size_t>> counts;
  const Integer limit = Integer(std::numeric_limits<std::int64_t>::max() / 4);
  if (largest * k_max < limit) {
    counts = search_counts<std::int64_t>(gens, beta, coords, k_max,
                                         [](const Integer& v) { return v.convert_to<std::int64_t>(); });
  } else {
    counts = search_counts<Integer>(gens, beta, coords, k_max, [](const Integer& v) { return v; });
  }
  if (!counts) return std::nullopt;

  PowerWitness w;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t c = 0; c < (*counts)[i]; ++c) w.factors.push_back(gens[i]);
  }
  w.k = w.factors.size();
  return w;
}

bool power_witness_valid(const MonomialIdeal& ideal, const ExponentVector& beta,
                         const PowerWitness& witness) {
  if (witness.k == 0 || witness.factors.size() != witness.k) return false;
  const auto expanded = materialize(ideal);
  ExponentVector total(beta.dim());
  for (const auto& f : witness.factors) {
    if (f.dim() != beta.dim()) return false;
    const auto& gens = expanded.generators();
    if (std::find(gens.begin(), gens.end(), f) == gens.end()) return false;
    total += f;
  }
  return total.divides(beta.scaled(Integer(witness.k)));
}

}  // namespace monoclosure
