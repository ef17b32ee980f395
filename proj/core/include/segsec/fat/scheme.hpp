#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segsec/la/matrix.hpp"

namespace segsec::fat {

using la::Elem;
using la::PrimeField;
using la::PrimeMatrix;

/// A fat point mP. `coordinate` is set exactly when the coordinates are a unit vector e_i.
struct FatPoint {
  std::vector<Elem> coords;  // n+1 entries, first nonzero is 1
  unsigned mult = 1;
  std::optional<unsigned> coordinate;
};

/// A linear space Λ ≅ P^k counted with multiplicity ℓ (the scheme of I_Λ^ℓ).
struct LinearComponent {
  PrimeMatrix span;  // (k+1) x (n+1), independent rows
  unsigned mult = 1;
  /// Set when the span is spanned by unit vectors; holds their indices.
  std::optional<std::vector<unsigned>> coordinate;

  [[nodiscard]] std::size_t dim() const noexcept { return span.rows() - 1; }
};

/// A concrete subscheme of P^n over a prime field: fat points plus fattened linear spaces.
/// Multiplicity-0 components are dropped when added.
class Scheme {
 public:
  Scheme(PrimeField field, unsigned ambient) : field_(field), ambient_(ambient) {}

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] unsigned ambient() const noexcept { return ambient_; }
  [[nodiscard]] const std::vector<FatPoint>& points() const noexcept { return points_; }
  [[nodiscard]] const std::vector<LinearComponent>& linears() const noexcept { return linears_; }
  /// Remarks attached by the calculus (e.g. steps outside the usual Horace calculus).
  [[nodiscard]] const std::vector<std::string>& notes() const noexcept { return notes_; }
  [[nodiscard]] bool empty() const noexcept { return points_.empty() && linears_.empty(); }

  /// Normalizes coords. Throws GuardViolation on the zero vector or a wrong length.
  void add_point(std::vector<Elem> coords, unsigned mult);
  void add_coordinate_point(unsigned index, unsigned mult);
  /// Rows of `span` are spanning points. Throws DegenerateSpan if they are dependent.
  void add_linear(const PrimeMatrix& span, unsigned mult);
  void add_note(std::string note);
  /// Appends every component of `other` (same field and ambient).
  void merge(const Scheme& other);

 private:
  PrimeField field_;
  unsigned ambient_;
  std::vector<FatPoint> points_;
  std::vector<LinearComponent> linears_;
  std::vector<std::string> notes_;
};

/// Index of the unit vector equal to v, if v is one.
[[nodiscard]] std::optional<unsigned> unit_index(const std::vector<Elem>& v) noexcept;

}  // namespace segsec::fat
