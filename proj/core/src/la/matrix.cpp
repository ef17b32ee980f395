#include "segsec/la/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace segsec::la {

PrimeMatrix::PrimeMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

PrimeMatrix PrimeMatrix::identity(PrimeField field, std::size_t n) {
  PrimeMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

PrimeMatrix PrimeMatrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PrimeMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows in PrimeMatrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, field.from_signed(rows[r][c]));
  }
  return m;
}

void PrimeMatrix::append_row(std::span<const Elem> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: column count mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void PrimeMatrix::append_rows(const PrimeMatrix& other) {
  if (other.cols_ != cols_) throw std::invalid_argument("append_rows: column count mismatch");
  if (!(other.field_ == field_)) throw std::invalid_argument("append_rows: field mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

PrimeMatrix PrimeMatrix::transpose() const {
  PrimeMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, (*this)(r, c));
  return t;
}

PrimeMatrix PrimeMatrix::select_rows(std::span<const std::size_t> which) const {
  PrimeMatrix out(field_, cols_);
  out.reserve_rows(which.size());
  for (std::size_t r : which) out.append_row(row(r));
  return out;
}

bool PrimeMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

}  // namespace segsec::la
