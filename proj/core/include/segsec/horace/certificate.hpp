#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "segsec/horace/profile.hpp"
#include "segsec/la/multi_prime.hpp"

namespace segsec::horace {

enum class Rule {
  DirectRank,
  Castelnuovo,
  Lemzero,
  ResidueLemma,
  TraceLemma,
  SubstitutionLemma,
  FixedComponent,
  AppendixArithmetic,
};

enum class Status { Verified, BoundOnly, Failed };

[[nodiscard]] std::string to_string(Rule r);
[[nodiscard]] std::string to_string(Status s);

/// One step of the proof tree. A node is verified only when its own identity holds and
/// every child is verified; a failed child fails it, otherwise a bound-only child makes it
/// bound-only.
struct CertificateNode {
  Rule rule = Rule::DirectRank;
  std::string scheme;              // symbolic descriptor
  unsigned degree = 0;
  BigInt claimed;
  std::optional<BigInt> computed;  // direct rank value, when one was computed
  Status status = Status::Verified;
  std::string detail;
  std::vector<CertificateNode> children;

  /// Sets status from `own_ok` and the children.
  void settle(bool own_ok);
  [[nodiscard]] std::size_t size() const;
};

/// Stable JSON: sorted keys, two-space indent. Integers beyond int64 are written as strings.
[[nodiscard]] std::string to_json(const CertificateNode& node);

struct CertifyOptions {
  /// Schemes of degree t in P^m are computed by rank only when C(t+m, m) <= cap.
  std::uint64_t cap = 1'000'000;
  /// Also compute dim (I_X)_n of the unspecialized scheme and compare with the root claim.
  bool direct_oracle = true;
  la::SamplingConfig sampling{};
};

/// Certificate for dim (I_X)_n = max(0, 2^n - (n+1)s), X = (n-1)Q_1+...+(n-1)Q_n+2P_1+...+2P_s,
/// s in {e, e*} odd, n >= 5. (4, 3), n < 5, even s and other s throw GuardViolation; an
/// infeasible specialization throws GuardViolation naming the inequality.
[[nodiscard]] CertificateNode main_theorem_certify(unsigned n, const BigInt& s, const CertifyOptions& opts = {});

}  // namespace segsec::horace
