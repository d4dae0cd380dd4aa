#include "monoclosure/exponent_vector.hpp"

#include "monoclosure/errors.hpp"

#include <algorithm>

namespace monoclosure {

ExponentVector::ExponentVector(std::size_t dim) : coords_(dim, Integer(0)) {}

ExponentVector::ExponentVector(std::vector<Integer> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c < 0) throw PreconditionError("exponent vector with a negative coordinate");
  }
}

ExponentVector::ExponentVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) {
    if (c < 0) throw PreconditionError("exponent vector with a negative coordinate");
    coords_.emplace_back(c);
  }
}

ExponentVector ExponentVector::unit(std::size_t dim, std::size_t index, Integer value) {
  ExponentVector v(dim);
  v.coords_.at(index) = std::move(value);
  return v;
}

Integer ExponentVector::degree() const {
  Integer total = 0;
  for (const auto& c : coords_) total += c;
  return total;
}

Integer ExponentVector::degree_on(std::span<const std::size_t> vars) const {
  Integer total = 0;
  for (std::size_t j : vars) total += coords_.at(j);
  return total;
}

bool ExponentVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] > other.coords_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector out = *this;
  out += other;
  return out;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  require_same_dim(dim(), other.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ExponentVector ExponentVector::scaled(const Integer& factor) const {
  if (factor < 0) throw PreconditionError("negative scale factor");
  ExponentVector out = *this;
  for (auto& c : out.coords_) c *= factor;
  return out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  ExponentVector out = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b.coords_[i] > out.coords_[i]) out.coords_[i] = b.coords_[i];
  }
  return out;
}

ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
  require_same_dim(a.dim(), b.dim());
  ExponentVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.coords_[i] > b.coords_[i]) out.coords_[i] = a.coords_[i] - b.coords_[i];
  }
  return out;
}

ExponentVector support(const ExponentVector& a) {
  ExponentVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.coords_[i] != 0) out.coords_[i] = 1;
  }
  return out;
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

void require_same_dim(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

bool graded_lex_less(const ExponentVector& a, const ExponentVector& b) {
  const Integer da = a.degree();
  const Integer db = b.degree();
  if (da != db) return da < db;
  return a < b;
}

}  // namespace monoclosure
