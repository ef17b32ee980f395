#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace segsec {

/// A documented precondition or lemma-case guard does not hold. `guard()` names it.
class GuardViolation : public std::invalid_argument {
 public:
  GuardViolation(std::string guard, const std::string& detail)
      : std::invalid_argument(guard + ": " + detail), guard_(std::move(guard)) {}
  [[nodiscard]] const std::string& guard() const noexcept { return guard_; }

 private:
  std::string guard_;
};

/// The request is outside the desk-scale envelope (degree, monomial count, ambient size).
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spanning points of a linear space are dependent, or a hyperplane frame is singular.
class DegenerateSpan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scheme-spec input. Line/column are 1-based; 0 when unknown.
class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(const std::string& field, const std::string& msg, std::size_t line = 0,
                 std::size_t column = 0)
      : std::runtime_error(format(field, msg, line, column)),
        field_(field), line_(line), column_(column) {}

  [[nodiscard]] const std::string& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& field, const std::string& msg, std::size_t line,
                            std::size_t column) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    if (!field.empty()) out += field + ": ";
    return out + msg;
  }

  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace segsec
