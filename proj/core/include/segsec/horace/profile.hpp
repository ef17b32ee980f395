#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace segsec::horace {

// Expression templates off: values mix freely with std::max and ?:.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// The integers attached to n in the main induction, all exact.
///
/// n = 4q + r, e = floor(2^n / (n+1)), e* = ceil(2^n / (n+1)), e = 2t+1 and e* = 2t*+1 when odd,
/// 2^n = (n+1)h + k with 1 <= k <= n (only meaningful when n+1 does not divide 2^n).
struct ParameterProfile {
  unsigned n = 0;
  unsigned q = 0;
  unsigned r = 0;
  BigInt pow2;
  BigInt e;
  BigInt e_star;
  std::optional<BigInt> t;
  std::optional<BigInt> t_star;
  BigInt h;
  BigInt k;
  bool divisible = false;  // (n+1) | 2^n, in which case e = e* and h, k are unset
};

/// Throws GuardViolation for n < 2.
[[nodiscard]] ParameterProfile make_profile(unsigned n);

/// Re-checks every defining identity; returns the first one that fails.
[[nodiscard]] std::optional<std::string> profile_violation(const ParameterProfile& p);

[[nodiscard]] inline bool is_odd(const BigInt& v) { return (v & 1) != 0; }

/// Decimal rendering.
[[nodiscard]] inline std::string str(const BigInt& v) { return v.str(); }

}  // namespace segsec::horace
