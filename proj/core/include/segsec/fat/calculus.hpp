#pragma once

#include <vector>

#include "segsec/fat/scheme.hpp"

namespace segsec::fat {

/// A hyperplane Π ⊂ P^n: its linear form and n spanning points (the frame). Points of Π are
/// identified with P^{n-1} through frame coordinates.
class Hyperplane {
 public:
  /// Π = {form = 0}. The frame is a kernel basis of the form.
  static Hyperplane from_form(const PrimeField& f, std::vector<Elem> form);
  /// Π spanned by n independent points; the frame is exactly these points, in order, so
  /// point i has frame coordinates e_i. Throws DegenerateSpan otherwise.
  static Hyperplane through(const PrimeMatrix& frame);

  [[nodiscard]] unsigned ambient() const noexcept { return static_cast<unsigned>(form_.size() - 1); }
  [[nodiscard]] const std::vector<Elem>& form() const noexcept { return form_; }
  [[nodiscard]] const PrimeMatrix& frame() const noexcept { return frame_; }
  [[nodiscard]] const PrimeField& field() const noexcept { return frame_.field(); }

  [[nodiscard]] Elem evaluate(const std::vector<Elem>& point) const noexcept;
  [[nodiscard]] bool contains(const std::vector<Elem>& point) const noexcept { return evaluate(point) == 0; }
  [[nodiscard]] bool contains(const PrimeMatrix& span) const noexcept;
  /// Frame coordinates (n entries) of a point of Π. Throws GuardViolation if off Π.
  [[nodiscard]] std::vector<Elem> to_frame(const std::vector<Elem>& point) const;
  /// The point of P^n with the given frame coordinates.
  [[nodiscard]] std::vector<Elem> from_frame(const std::vector<Elem>& coords) const;

 private:
  Hyperplane(std::vector<Elem> form, PrimeMatrix frame);
  std::vector<Elem> form_;
  PrimeMatrix frame_;           // n x (n+1)
  std::vector<std::size_t> cols_;  // n columns where the frame is invertible
  PrimeMatrix solve_;           // inverse of frame restricted to cols_
};

/// Res_Π X = (I_X : I_Π). Components on Π lose one multiplicity; others are unchanged (a
/// power of a linear prime is primary, so the colon does nothing). Linear components not
/// contained in Π add a note, since the Horace arguments never residuate them.
[[nodiscard]] Scheme residual(const Scheme& x, const Hyperplane& pi);

/// Tr_Π X = X ∩ Π inside Π ≅ P^{n-1}. Fat points on Π keep their multiplicity; points off Π
/// vanish; a linear component meets Π in its span intersection with the same multiplicity.
[[nodiscard]] Scheme trace(const Scheme& x, const Hyperplane& pi);

/// Image of P under projection from q onto Π: L(P) q - L(q) P.
[[nodiscard]] std::vector<Elem> project_point(const std::vector<Elem>& p, const std::vector<Elem>& q,
                                              const Hyperplane& pi);

/// Projects every component from q into Π (frame coordinates). Fat points at q are removed;
/// a linear space through q maps to the one-dimension-smaller space of its lines through q.
/// Throws GuardViolation if q lies on Π.
[[nodiscard]] Scheme project_from_point(const Scheme& x, const std::vector<Elem>& q, const Hyperplane& pi);

}  // namespace segsec::fat
