#include "segsec/horace/profile.hpp"

#include "segsec/errors.hpp"

namespace segsec::horace {

ParameterProfile make_profile(unsigned n) {
  if (n < 2) throw GuardViolation("n >= 2", "got n = " + std::to_string(n));
  ParameterProfile p;
  p.n = n;
  p.q = n / 4;
  p.r = n % 4;
  p.pow2 = BigInt(1) << n;
  const BigInt np1 = n + 1;
  p.e = p.pow2 / np1;
  const BigInt rem = p.pow2 % np1;
  p.divisible = rem == 0;
  p.e_star = p.divisible ? p.e : p.e + 1;
  if (is_odd(p.e)) p.t = (p.e - 1) / 2;
  if (is_odd(p.e_star)) p.t_star = (p.e_star - 1) / 2;
  if (!p.divisible) {
    p.h = p.e;
    p.k = rem;
  }
  return p;
}

std::optional<std::string> profile_violation(const ParameterProfile& p) {
  const BigInt np1 = p.n + 1;
  if (BigInt(4) * p.q + p.r != p.n || p.r >= 4) return "n = 4q + r, 0 <= r < 4";
  if (p.pow2 != (BigInt(1) << p.n)) return "pow2 = 2^n";
  if (!(np1 * p.e <= p.pow2 && p.pow2 < np1 * (p.e + 1))) return "e = floor(2^n / (n+1))";
  if (!(np1 * p.e_star >= p.pow2 && np1 * (p.e_star - 1) < p.pow2)) return "e* = ceil(2^n / (n+1))";
  if (p.t && 2 * *p.t + 1 != p.e) return "e = 2t + 1";
  if (p.t_star && 2 * *p.t_star + 1 != p.e_star) return "e* = 2t* + 1";
  if (!p.divisible) {
    if (np1 * p.h + p.k != p.pow2) return "2^n = (n+1)h + k";
    if (p.k < 1 || p.k > p.n) return "1 <= k <= n";
  }
  return std::nullopt;
}

}  // namespace segsec::horace
