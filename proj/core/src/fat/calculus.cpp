#include "segsec/fat/calculus.hpp"

#include <algorithm>
#include <string>

#include "segsec/errors.hpp"
#include "segsec/la/rank.hpp"

namespace segsec::fat {

namespace {

std::vector<Elem> row_vec(const PrimeMatrix& m, std::size_t r) {
  const auto row = m.row(r);
  return {row.begin(), row.end()};
}

// Independent rows spanning the row space of m (possibly none).
PrimeMatrix row_basis(const PrimeMatrix& m) {
  std::vector<std::size_t> keep;
  PrimeMatrix acc(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    acc.append_row(m.row(r));
    if (la::rank(acc) == keep.size() + 1) {
      keep.push_back(r);
    } else {
      acc = m.select_rows(keep);
    }
  }
  return m.select_rows(keep);
}

bool is_zero(const std::vector<Elem>& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace

Hyperplane::Hyperplane(std::vector<Elem> form, PrimeMatrix frame)
    : form_(std::move(form)), frame_(std::move(frame)), solve_(frame_.field(), 0, 0) {
  // Pick n columns on which the frame is invertible: the pivots of its echelon form.
  const auto ech = la::rref(frame_);
  cols_ = ech.pivots;
  const std::size_t n = frame_.rows();
  PrimeMatrix sub(frame_.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sub.set(i, j, frame_(i, cols_[j]));
  solve_ = *la::inverse(sub);
}

Hyperplane Hyperplane::from_form(const PrimeField& f, std::vector<Elem> form) {
  if (form.size() < 2) throw GuardViolation("hyperplane", "ambient dimension must be >= 1");
  if (is_zero(form)) throw DegenerateSpan("the zero form does not define a hyperplane");
  PrimeMatrix m(f, form.size());
  m.append_row(form);
  PrimeMatrix frame = la::kernel_basis(m);
  return Hyperplane(std::move(form), std::move(frame));
}

Hyperplane Hyperplane::through(const PrimeMatrix& frame) {
  if (frame.rows() + 1 != frame.cols())
    throw GuardViolation("hyperplane", "need n spanning points in P^n");
  if (la::rank(frame) != frame.rows()) throw DegenerateSpan("hyperplane spanning points are dependent");
  const PrimeMatrix k = la::kernel_basis(frame);
  return Hyperplane(row_vec(k, 0), frame);
}

Elem Hyperplane::evaluate(const std::vector<Elem>& point) const noexcept {
  const PrimeField& f = field();
  Elem acc = 0;
  for (std::size_t i = 0; i < form_.size(); ++i) acc = f.add(acc, f.mul(form_[i], point[i]));
  return acc;
}

bool Hyperplane::contains(const PrimeMatrix& span) const noexcept {
  for (std::size_t r = 0; r < span.rows(); ++r)
    if (!contains(row_vec(span, r))) return false;
  return true;
}

std::vector<Elem> Hyperplane::to_frame(const std::vector<Elem>& point) const {
  if (!contains(point)) throw GuardViolation("point on hyperplane", "frame coordinates need a point of Π");
  const PrimeField& f = field();
  const std::size_t n = frame_.rows();
  // point = c * frame, so point[cols] = c * sub and c = point[cols] * sub^{-1}.
  std::vector<Elem> c(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Elem acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc = f.add(acc, f.mul(point[cols_[i]], solve_(i, j)));
    c[j] = acc;
  }
  return c;
}

std::vector<Elem> Hyperplane::from_frame(const std::vector<Elem>& coords) const {
  const PrimeField& f = field();
  std::vector<Elem> p(frame_.cols(), 0);
  for (std::size_t i = 0; i < frame_.rows(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) p[j] = f.add(p[j], f.mul(coords[i], frame_(i, j)));
  return p;
}

Scheme residual(const Scheme& x, const Hyperplane& pi) {
  Scheme out(x.field(), x.ambient());
  for (const auto& n : x.notes()) out.add_note(n);
  for (const auto& p : x.points()) out.add_point(p.coords, pi.contains(p.coords) ? p.mult - 1 : p.mult);
  for (const auto& l : x.linears()) {
    if (pi.contains(l.span)) {
      out.add_linear(l.span, l.mult - 1);
    } else {
      out.add_linear(l.span, l.mult);
      out.add_note("outside the standard calculus: residual of a linear component not contained in the hyperplane");
    }
  }
  return out;
}

Scheme trace(const Scheme& x, const Hyperplane& pi) {
  const PrimeField& f = x.field();
  Scheme out(f, x.ambient() - 1);
  for (const auto& n : x.notes()) out.add_note(n);
  for (const auto& p : x.points())
    if (pi.contains(p.coords)) out.add_point(pi.to_frame(p.coords), p.mult);
  for (const auto& l : x.linears()) {
    PrimeMatrix inside(f, x.ambient());
    if (pi.contains(l.span)) {
      for (std::size_t r = 0; r < l.span.rows(); ++r) inside.append_row(pi.to_frame(row_vec(l.span, r)));
    } else {
      // Combinations sum c_i v_i with sum c_i L(v_i) = 0.
      PrimeMatrix lv(f, l.span.rows());
      std::vector<Elem> vals(l.span.rows());
      for (std::size_t r = 0; r < l.span.rows(); ++r) vals[r] = pi.evaluate(row_vec(l.span, r));
      lv.append_row(vals);
      const PrimeMatrix k = la::kernel_basis(lv);
      for (std::size_t r = 0; r < k.rows(); ++r) {
        std::vector<Elem> pt(x.ambient() + 1, 0);
        for (std::size_t i = 0; i < l.span.rows(); ++i)
          for (std::size_t j = 0; j < pt.size(); ++j) pt[j] = f.add(pt[j], f.mul(k(r, i), l.span(i, j)));
        inside.append_row(pi.to_frame(pt));
      }
    }
    if (inside.rows() > 0) out.add_linear(inside, l.mult);
  }
  return out;
}

std::vector<Elem> project_point(const std::vector<Elem>& p, const std::vector<Elem>& q, const Hyperplane& pi) {
  const PrimeField& f = pi.field();
  const Elem lp = pi.evaluate(p), lq = pi.evaluate(q);
  std::vector<Elem> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[j] = f.sub(f.mul(lp, q[j]), f.mul(lq, p[j]));
  return out;
}

Scheme project_from_point(const Scheme& x, const std::vector<Elem>& q, const Hyperplane& pi) {
  if (pi.contains(q)) throw GuardViolation("apex off hyperplane", "the projection centre lies on Π");
  const PrimeField& f = x.field();
  Scheme out(f, x.ambient() - 1);
  for (const auto& n : x.notes()) out.add_note(n);
  for (const auto& p : x.points()) {
    const auto img = project_point(p.coords, q, pi);
    if (is_zero(img)) continue;  // p == q: the apex
    out.add_point(pi.to_frame(img), p.mult);
  }
  for (const auto& l : x.linears()) {
    PrimeMatrix imgs(f, x.ambient() + 1);
    for (std::size_t r = 0; r < l.span.rows(); ++r) imgs.append_row(project_point(row_vec(l.span, r), q, pi));
    const PrimeMatrix basis = row_basis(imgs);
    if (basis.rows() == 0) continue;
    PrimeMatrix inside(f, x.ambient());
    for (std::size_t r = 0; r < basis.rows(); ++r) inside.append_row(pi.to_frame(row_vec(basis, r)));
    out.add_linear(inside, l.mult);
  }
  return out;
}

}  // namespace segsec::fat
