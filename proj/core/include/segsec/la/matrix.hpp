#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "segsec/la/field.hpp"

namespace segsec::la {

/// Dense row-major matrix over a prime field. Entries are always reduced.
class PrimeMatrix {
 public:
  PrimeMatrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// An empty matrix with a fixed column count, to be filled with append_row.
  PrimeMatrix(PrimeField field, std::size_t cols) : PrimeMatrix(field, 0, cols) {}

  static PrimeMatrix identity(PrimeField field, std::size_t n);
  /// Reduces arbitrary integers into the field. All rows must have equal length.
  static PrimeMatrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }

  [[nodiscard]] Elem operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  /// `value` must already be reduced.
  void set(std::size_t r, std::size_t c, Elem value) noexcept { data_[r * cols_ + c] = value; }

  [[nodiscard]] std::span<const Elem> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> values);
  void append_rows(const PrimeMatrix& other);
  void reserve_rows(std::size_t n) { data_.reserve(n * cols_); }

  [[nodiscard]] PrimeMatrix transpose() const;
  [[nodiscard]] PrimeMatrix select_rows(std::span<const std::size_t> which) const;
  [[nodiscard]] bool is_zero() const noexcept;

  bool operator==(const PrimeMatrix& other) const = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

}  // namespace segsec::la
