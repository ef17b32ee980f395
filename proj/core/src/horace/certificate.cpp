#include "segsec/horace/certificate.hpp"

#include <algorithm>
#include <limits>
#include <json.hpp>

#include "segsec/errors.hpp"
#include "segsec/fat/monomials.hpp"
#include "segsec/fat/spec.hpp"
#include "segsec/horace/bounds.hpp"
#include "segsec/horace/lemmas.hpp"

namespace segsec::horace {

std::string to_string(Rule r) {
  switch (r) {
    case Rule::DirectRank: return "direct-rank";
    case Rule::Castelnuovo: return "castelnuovo";
    case Rule::Lemzero: return "lemzero";
    case Rule::ResidueLemma: return "residue-lemma";
    case Rule::TraceLemma: return "trace-lemma";
    case Rule::SubstitutionLemma: return "substitution-lemma";
    case Rule::FixedComponent: return "fixed-component";
    case Rule::AppendixArithmetic: return "appendix-arithmetic";
  }
  return "?";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::BoundOnly: return "bound-only";
    case Status::Failed: return "failed";
  }
  return "?";
}

void CertificateNode::settle(bool own_ok) {
  status = own_ok ? Status::Verified : Status::Failed;
  for (const auto& c : children) {
    if (c.status == Status::Failed) status = Status::Failed;
    if (c.status == Status::BoundOnly && status == Status::Verified) status = Status::BoundOnly;
  }
}

std::size_t CertificateNode::size() const {
  std::size_t total = 1;
  for (const auto& c : children) total += c.size();
  return total;
}

namespace {

using nlohmann::json;

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json node_json(const CertificateNode& n) {
  json j;
  j["rule"] = to_string(n.rule);
  j["scheme"] = n.scheme;
  j["degree"] = n.degree;
  j["claimed"] = big(n.claimed);
  j["computed"] = n.computed ? big(*n.computed) : json(nullptr);
  j["status"] = to_string(n.status);
  j["detail"] = n.detail;
  j["children"] = json::array();
  for (const auto& c : n.children) j["children"].push_back(node_json(c));
  return j;
}

bool within_cap(unsigned t, unsigned m, std::uint64_t cap) {
  return fat::binomial(std::uint64_t{t} + m, m) <= cap;
}

std::string sum(const std::string& term, const std::string& last) {
  return term + "_1+...+" + term + "_" + last;
}

CertificateNode node(Rule rule, std::string scheme, unsigned degree, BigInt claimed, std::string detail = {}) {
  CertificateNode c;
  c.rule = rule;
  c.scheme = std::move(scheme);
  c.degree = degree;
  c.claimed = std::move(claimed);
  c.detail = std::move(detail);
  return c;
}

struct Split {
  unsigned n;
  unsigned q;
  BigInt s, ts, yw, yt;
  bool lower;            // s = e
  std::string tname;     // "t" or "t*"
};

// The lemma leaf: arithmetic case selection, then a direct rank when under the cap.
CertificateNode lemma_leaf(bool residue, const Split& sp, BigInt formula, std::uint64_t cap,
                           const la::SamplingConfig& cfg) {
  const unsigned m = sp.n - 1;
  const BigInt& y = residue ? sp.yw : sp.yt;
  const std::string params = "m=" + std::to_string(m) + ", x=" + std::to_string(sp.q) + ", y=" + str(y);
  std::string scheme = residue ? "W' = " + sum(std::to_string(m - 1) + "Q", std::to_string(m)) +
                                     " + J2(H_1)+...+J2(H_x) + 2R_1+...+2R_y in P^" + std::to_string(m)
                               : "T' = " + sum(std::to_string(m - 1) + "Q", std::to_string(m)) +
                                     " + H_1+...+H_x + 2R_1+...+2R_y in P^" + std::to_string(m);
  CertificateNode leaf = node(residue ? Rule::ResidueLemma : Rule::TraceLemma, scheme + " (" + params + ")", m, formula);
  const auto lcase = residue ? residue_case(m, sp.q, y) : trace_case(m, sp.q, y);
  if (!lcase) {
    leaf.detail = "no lemma case covers " + params;
    leaf.settle(false);
    return leaf;
  }
  leaf.detail = "case (" + lcase->label + ")";
  if (lcase->x_prime != sp.q || lcase->y_prime != y)
    leaf.detail += " from x'=" + str(lcase->x_prime) + ", y'=" + str(lcase->y_prime);
  if (!within_cap(m, m, cap) || y > 100000) {
    leaf.detail += "; above direct-computation cap, value taken from the lemma";
    leaf.status = Status::BoundOnly;
    return leaf;
  }
  const LemmaInstance inst{m, sp.q, y.convert_to<unsigned>()};
  const auto rep = residue ? residue_lemma_eval(inst, cfg) : trace_lemma_eval(inst, cfg);
  leaf.computed = rep.value;
  leaf.settle(rep.pass() && BigInt(rep.value) == formula);
  return leaf;
}

// W' - (s-1)/2 and T' - ((s+1)/2 - 2q) through 2^n = (n+1)h + k.
CertificateNode surplus_node(bool residue, const Split& sp, const ParameterProfile& p, const BigInt& prime_value) {
  const BigInt& subtract = residue ? sp.ts : sp.yw;
  const BigInt surplus = prime_value - subtract;
  const BigInt r = p.r, n = p.n;
  BigInt twice;
  std::string formula;
  if (residue && sp.lower) twice = p.k - r + 1, formula = "(k - r + 1)/2 >= 0";
  if (!residue && sp.lower) twice = p.k + r - 1, formula = "(k + r - 1)/2 >= 0";
  if (residue && !sp.lower) twice = p.k - r - n, formula = "(k - r - n)/2 <= 0";
  if (!residue && !sp.lower) twice = p.k - n + r - 2, formula = "(k - n + r - 2)/2 <= 0";
  const std::string lhs = residue ? "W' - " + sp.tname : "T' - (" + sp.tname + "+1-2q)";
  CertificateNode c = node(Rule::AppendixArithmetic, lhs + " = " + formula, 0, surplus,
                           "2^n = (n+1)h + k with h=" + str(p.h) + ", k=" + str(p.k) + ", r=" + str(r));
  const bool identity = 2 * surplus == twice;
  const bool sign = sp.lower ? surplus >= 0 : surplus <= 0;
  c.settle(identity && sign);
  return c;
}

fat::SchemeSpec specialized_spec(const Split& sp, bool with_components) {
  using fat::SpanEntry;
  using fat::SubspaceSpec;
  const unsigned n = sp.n;
  const unsigned s = sp.s.convert_to<unsigned>();
  const unsigned on_pi = sp.ts.convert_to<unsigned>();
  fat::SchemeSpec spec;
  spec.ambient = n;
  spec.degree = n;
  for (unsigned i = 1; i <= n; ++i) spec.coordinate(i, n - 1);
  SubspaceSpec pi{"Pi", {}, false, 1};
  for (unsigned i = 2; i <= n; ++i) pi.span.push_back({SpanEntry::Kind::Coordinate, i, {}});
  pi.span.push_back({SpanEntry::Kind::Generic, 0, {}});
  spec.subspace(pi);
  auto point_index = [&](unsigned j) { return n - 1 + j; };  // P_j in spec.points
  for (unsigned j = 1; j <= s; ++j) {
    if (j <= 2 * sp.q && j % 2 == 0) spec.on_subspace("Lambda" + std::to_string(j / 2), 2);
    else if (j > 2 * sp.q && j <= 2 * sp.q + on_pi) spec.on_subspace("Pi", 2);
    else spec.generic(2);
  }
  for (unsigned i = 1; i <= sp.q; ++i)
    spec.subspace(SubspaceSpec{"Lambda" + std::to_string(i),
                               {{SpanEntry::Kind::Coordinate, 1, {}},
                                {SpanEntry::Kind::Coordinate, 2 * i, {}},
                                {SpanEntry::Kind::Coordinate, 2 * i + 1, {}},
                                {SpanEntry::Kind::Point, point_index(2 * i - 1), {}}},
                               with_components,
                               1});
  if (with_components)
    for (unsigned j = 2 * sp.q + 1; j <= s; ++j)
      spec.subspace(SubspaceSpec{"L" + std::to_string(j),
                                 {{SpanEntry::Kind::Coordinate, 1, {}}, {SpanEntry::Kind::Point, point_index(j), {}}},
                                 true,
                                 1});
  return spec;
}

// One Horace step executed on concrete samples: dim Z, the split W/T, and dim of the
// specialization without the fixed components, each minimised over cells.
struct SplitValues {
  std::size_t z = 0, specialized = 0, w = 0, t = 0;
  bool bound_holds = true;
};

SplitValues execute_split(const Split& sp, const la::SamplingConfig& cfg) {
  const auto z_spec = specialized_spec(sp, true);
  const auto x_spec = specialized_spec(sp, false);
  const std::size_t cells = cfg.primes.size() * cfg.trials;
  std::vector<SplitValues> out(cells);
  la::parallel_for(cells, [&](std::size_t idx) {
    const auto prime = cfg.primes[idx / cfg.trials];
    const fat::PrimeField f(prime);
    la::Rng rng = la::cell_rng(cfg.seed, prime, idx % cfg.trials);
    la::Rng rng2 = rng;
    const auto z = fat::instantiate(z_spec, f, rng);
    const auto x = fat::instantiate(x_spec, f, rng2);
    const auto pi = fat::Hyperplane::through(z.registry.at("Pi"));
    const auto rep = lemzero_bound(z.scheme, pi);
    out[idx] = {rep.direct, ideal_dim_any(x.scheme, sp.n), rep.w_dim, rep.t_dim, rep.holds()};
  });
  SplitValues v = out[0];
  for (const auto& c : out) {
    v.z = std::min(v.z, c.z);
    v.specialized = std::min(v.specialized, c.specialized);
    v.w = std::min(v.w, c.w);
    v.t = std::min(v.t, c.t);
    v.bound_holds = v.bound_holds && c.bound_holds;
  }
  return v;
}

}  // namespace

std::string to_json(const CertificateNode& node) { return node_json(node).dump(2) + "\n"; }

CertificateNode main_theorem_certify(unsigned n, const BigInt& s, const CertifyOptions& opts) {
  if (n == 4 && s == 3)
    throw GuardViolation("(n, s) != (4, 3)", "exception case: dim (I_X)_4 = 2, one more than expected");
  if (n < 5) throw GuardViolation("n >= 5", "got n = " + std::to_string(n));
  la::validate(opts.sampling);
  const ParameterProfile p = make_profile(n);
  if (s != p.e && s != p.e_star)
    throw GuardViolation("s in {e, e*}", "e = " + str(p.e) + ", e* = " + str(p.e_star) + ", got s = " + str(s));
  if (!is_odd(s)) throw GuardViolation("s odd", "even s is the classical even case; compute it directly");

  Split sp{n, p.q, s, (s - 1) / 2, (s + 1) / 2 - 2 * p.q, (s - 1) / 2, s == p.e, s == p.e ? "t" : "t*"};
  const BigInt two_q = 2 * BigInt(p.q);
  if (two_q + 1 > n) throw GuardViolation("2q+1 <= n", str(two_q + 1) + " > " + std::to_string(n));
  if (two_q + sp.ts > s)
    throw GuardViolation("2q+" + sp.tname + " <= s", str(two_q + sp.ts) + " > " + str(s));
  if (sp.yw < 0) throw GuardViolation("(s+1)/2 - 2q >= 0", "got " + str(sp.yw));

  const unsigned m = n - 1;
  const BigInt claim = std::max(BigInt(0), p.pow2 - BigInt(n + 1) * s);
  const BigInt w_prime = residue_formula(m, sp.q, sp.yw);
  const BigInt t_prime = trace_formula(m, sp.q, sp.yt);
  const BigInt w = std::max(BigInt(0), w_prime - sp.ts);
  const BigInt t = std::max(BigInt(0), t_prime - sp.yw);

  CertificateNode root = node(Rule::Lemzero,
                              "X = " + sum(std::to_string(n - 1) + "Q", std::to_string(n)) + " + " +
                                  sum("2P", str(s)) + " in P^" + std::to_string(n),
                              n, claim);
  root.detail = "n=4q+r with q=" + std::to_string(p.q) + ", r=" + std::to_string(p.r) + "; s=" +
                (sp.lower ? "e" : "e*") + "=2" + sp.tname + "+1 with " + sp.tname + "=" + str(sp.ts) +
                "; dim <= W + T = " + str(w) + " + " + str(t);

  CertificateNode feas = node(Rule::AppendixArithmetic, "specialization feasibility", 0, 0,
                              "2q+1=" + str(two_q + 1) + " <= n=" + std::to_string(n) + "; 2q+" + sp.tname + "=" +
                                  str(two_q + sp.ts) + " <= s=" + str(s));
  feas.settle(true);
  root.children.push_back(std::move(feas));

  CertificateNode wn = node(Rule::ResidueLemma, "W = W' + " + sp.tname + " generic simple points in P^" + std::to_string(m),
                            m, w, "W' = " + str(w_prime));
  wn.children.push_back(lemma_leaf(true, sp, w_prime, opts.cap, opts.sampling));
  wn.children.push_back(surplus_node(true, sp, p, w_prime));
  wn.settle(w == std::max(BigInt(0), w_prime - sp.ts));
  root.children.push_back(std::move(wn));

  CertificateNode tn = node(Rule::TraceLemma,
                            "T = T' + (" + sp.tname + "+1-2q) generic simple points in P^" + std::to_string(m), m, t,
                            "T' = " + str(t_prime));
  tn.children.push_back(lemma_leaf(false, sp, t_prime, opts.cap, opts.sampling));
  tn.children.push_back(surplus_node(false, sp, p, t_prime));
  tn.settle(t == std::max(BigInt(0), t_prime - sp.yw));
  root.children.push_back(std::move(tn));

  std::optional<std::size_t> generic;
  const bool direct = within_cap(n, n, opts.cap);
  if (opts.direct_oracle && direct) {
    generic = fat::ideal_dim(fat::segre_to_fatpoints(n, s.convert_to<unsigned>()), n, opts.sampling).value;
    CertificateNode oracle = node(Rule::DirectRank, "X with generic points (oracle)", n, claim);
    oracle.computed = *generic;
    oracle.settle(BigInt(*generic) == claim);
    root.children.push_back(std::move(oracle));
  }

  CertificateNode step = node(Rule::Castelnuovo,
                              "Z = X~ + Lambda_1+...+Lambda_q + L_{2q+1}+...+L_s (executed split)", n, claim);
  if (direct) {
    const SplitValues v = execute_split(sp, opts.sampling);
    step.computed = v.z;
    step.detail = "dim Z=" + std::to_string(v.z) + " <= W+T=" + std::to_string(v.w + v.t) + " on every sample";
    CertificateNode fixed = node(Rule::FixedComponent, "X~ (specialized) vs Z", n, v.z,
                                 "Lambda_i and L_j are fixed components");
    fixed.computed = v.specialized;
    bool semicontinuous = true;
    if (generic) {
      semicontinuous = v.specialized >= *generic;
      fixed.detail += "; specialized " + std::to_string(v.specialized) + " >= generic " + std::to_string(*generic);
    }
    fixed.settle(v.specialized == v.z && semicontinuous);
    step.children.push_back(std::move(fixed));
    CertificateNode wc = node(Rule::DirectRank, "W from Res_Pi Z projected from Q_1", m, w);
    wc.computed = v.w;
    wc.settle(BigInt(v.w) == w);
    step.children.push_back(std::move(wc));
    CertificateNode tc = node(Rule::DirectRank, "T = Res_Pi' Tr_Pi Z", m, t);
    tc.computed = v.t;
    tc.settle(BigInt(v.t) == t);
    step.children.push_back(std::move(tc));
    step.settle(v.bound_holds && BigInt(v.z) == claim);
  } else {
    step.detail = "above direct-computation cap; not executed";
    step.status = Status::BoundOnly;
  }
  root.children.push_back(std::move(step));

  root.settle(w + t == claim);
  return root;
}

}  // namespace segsec::horace
