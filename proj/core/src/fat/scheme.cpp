#include "segsec/fat/scheme.hpp"

#include <algorithm>

#include "segsec/errors.hpp"
#include "segsec/la/rank.hpp"
#include "segsec/la/rng.hpp"

namespace segsec::fat {

std::optional<unsigned> unit_index(const std::vector<Elem>& v) noexcept {
  std::optional<unsigned> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || idx) return std::nullopt;
    idx = static_cast<unsigned>(i);
  }
  return idx;
}

void Scheme::add_point(std::vector<Elem> coords, unsigned mult) {
  if (coords.size() != ambient_ + 1)
    throw GuardViolation("point length", "expected " + std::to_string(ambient_ + 1) + " coordinates, got " +
                                             std::to_string(coords.size()));
  if (std::all_of(coords.begin(), coords.end(), [](Elem e) { return e == 0; }))
    throw GuardViolation("point nonzero", "the zero vector is not a projective point");
  if (mult == 0) return;
  la::normalize_projective(coords, field_);
  const auto coord = unit_index(coords);
  points_.push_back({std::move(coords), mult, coord});
}

void Scheme::add_coordinate_point(unsigned index, unsigned mult) {
  if (index > ambient_)
    throw GuardViolation("coordinate index", std::to_string(index) + " > n = " + std::to_string(ambient_));
  std::vector<Elem> e(ambient_ + 1, 0);
  e[index] = 1;
  add_point(std::move(e), mult);
}

void Scheme::add_linear(const PrimeMatrix& span, unsigned mult) {
  if (span.cols() != ambient_ + 1)
    throw GuardViolation("span length", "spanning points need " + std::to_string(ambient_ + 1) + " coordinates");
  if (span.rows() == 0) throw DegenerateSpan("a linear space needs at least one spanning point");
  if (la::rank(span) != span.rows())
    throw DegenerateSpan("spanning points are dependent (" + std::to_string(span.rows()) + " points, rank " +
                         std::to_string(la::rank(span)) + ")");
  if (mult == 0) return;
  // A span is coordinate iff its reduced echelon form consists of unit vectors.
  const auto e = la::rref(span);
  std::vector<unsigned> units;
  for (std::size_t r = 0; r < e.reduced.rows(); ++r) {
    const auto row = e.reduced.row(r);
    const auto u = unit_index(std::vector<Elem>(row.begin(), row.end()));
    if (!u) {
      units.clear();
      break;
    }
    units.push_back(*u);
  }
  LinearComponent lc{span, mult, std::nullopt};
  if (units.size() == span.rows()) lc.coordinate = std::move(units);
  linears_.push_back(std::move(lc));
}

void Scheme::add_note(std::string note) {
  if (std::find(notes_.begin(), notes_.end(), note) == notes_.end()) notes_.push_back(std::move(note));
}

void Scheme::merge(const Scheme& other) {
  if (!(other.field_ == field_) || other.ambient_ != ambient_)
    throw GuardViolation("merge", "schemes live in different ambients or fields");
  points_.insert(points_.end(), other.points_.begin(), other.points_.end());
  linears_.insert(linears_.end(), other.linears_.begin(), other.linears_.end());
  for (const auto& n : other.notes_) add_note(n);
}

}  // namespace segsec::fat
