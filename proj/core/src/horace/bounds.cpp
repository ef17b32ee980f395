#include "segsec/horace/bounds.hpp"

#include <string>

#include "segsec/errors.hpp"
#include "segsec/fat/conditions.hpp"
#include "segsec/fat/monomials.hpp"

namespace segsec::horace {

std::size_t ideal_dim_any(const fat::Scheme& x, unsigned t) {
  if (x.empty()) return static_cast<std::size_t>(fat::binomial(std::uint64_t{t} + x.ambient(), x.ambient()));
  if (t == 0) return 0;
  for (const auto& p : x.points())
    if (p.mult > t) return 0;
  for (const auto& l : x.linears())
    if (l.mult > t) return 0;
  return fat::ideal_dim(x, t);
}

CastelnuovoReport castelnuovo_bound(const fat::Scheme& x, const fat::Hyperplane& pi, unsigned t) {
  if (t < 1) throw GuardViolation("t >= 1", "castelnuovo needs a degree t >= 1");
  if (pi.ambient() != x.ambient()) throw GuardViolation("hyperplane in the scheme's ambient", "dimension mismatch");
  CastelnuovoReport rep;
  rep.res_dim = ideal_dim_any(fat::residual(x, pi), t - 1);
  rep.trace_dim = ideal_dim_any(fat::trace(x, pi), t);
  rep.bound = rep.res_dim + rep.trace_dim;
  rep.direct = ideal_dim_any(x, t);
  return rep;
}

LemzeroReport lemzero_bound(const fat::Scheme& x, const fat::Hyperplane& pi) {
  const unsigned n = x.ambient();
  if (n < 2) throw GuardViolation("n >= 2", "got n = " + std::to_string(n));
  if (pi.ambient() != n) throw GuardViolation("hyperplane in the scheme's ambient", "dimension mismatch");
  for (unsigned i = 1; i <= n; ++i) {
    bool found = false;
    for (const auto& p : x.points()) found = found || (p.coordinate == i && p.mult >= n - 1);
    if (!found)
      throw GuardViolation("X contains (n-1)Q_1 + ... + (n-1)Q_n",
                           "no point of multiplicity >= " + std::to_string(n - 1) + " at e_" + std::to_string(i));
  }
  std::vector<fat::Elem> e(n + 1, 0);
  e[1] = 1;
  const auto q1 = e;
  if (pi.contains(q1)) throw GuardViolation("Q_1 not on Π", "the hyperplane contains e_1");
  fat::PrimeMatrix inner(x.field(), n);
  for (unsigned i = 2; i <= n; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    if (!pi.contains(e)) throw GuardViolation("Π through Q_2..Q_n", "e_" + std::to_string(i) + " is off the hyperplane");
    inner.append_row(pi.to_frame(e));
  }
  LemzeroReport rep;
  rep.w_dim = ideal_dim_any(fat::project_from_point(fat::residual(x, pi), q1, pi), n - 1);
  const auto pi_prime = fat::Hyperplane::through(inner);
  rep.t_dim = ideal_dim_any(fat::residual(fat::trace(x, pi), pi_prime), n - 1);
  rep.bound = rep.w_dim + rep.t_dim;
  rep.direct = ideal_dim_any(x, n);
  return rep;
}

}  // namespace segsec::horace
