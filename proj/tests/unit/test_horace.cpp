#include <gtest/gtest.h>

#include <chrono>

#include "../support/fuzz.hpp"
#include "segsec/errors.hpp"
#include "segsec/fat/conditions.hpp"
#include "segsec/fat/monomials.hpp"
#include "segsec/horace/appendix.hpp"
#include "segsec/horace/bounds.hpp"
#include "segsec/horace/certificate.hpp"
#include "segsec/horace/lemmas.hpp"
#include "segsec/la/multi_prime.hpp"

using namespace segsec::horace;
using segsec::GuardViolation;
using segsec::fat::Elem;
using segsec::fat::Hyperplane;
using segsec::fat::PrimeField;
using segsec::fat::PrimeMatrix;
using segsec::fat::Scheme;
using segsec::la::Rng;
using segsec::la::SamplingConfig;
using segsec::la::Seed;

namespace {

SamplingConfig cfg(std::uint64_t seed = segsec::la::kDefaultSeed.value) {
  SamplingConfig c;
  c.seed = Seed{seed};
  return c;
}

std::string guard_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GuardViolation& g) {
    return g.guard();
  }
  return "<none>";
}

}  // namespace

TEST(Profile, SmallValues) {
  const auto p = make_profile(5);
  EXPECT_EQ(p.q, 1u);
  EXPECT_EQ(p.r, 1u);
  EXPECT_EQ(p.e, 5);
  EXPECT_EQ(p.e_star, 6);
  ASSERT_TRUE(p.t.has_value());
  EXPECT_EQ(*p.t, 2);
  EXPECT_FALSE(p.t_star.has_value());
  EXPECT_EQ(p.h, 5);
  EXPECT_EQ(p.k, 2);
  const auto d = make_profile(7);  // 128 = 8 * 16
  EXPECT_TRUE(d.divisible);
  EXPECT_EQ(d.e, d.e_star);
  EXPECT_FALSE(d.t.has_value());
  EXPECT_THROW((void)make_profile(1), GuardViolation);
}

TEST(Profile, IdentitiesHoldEverywhere) {
  for (unsigned n = 2; n <= 600; ++n) EXPECT_FALSE(profile_violation(make_profile(n)).has_value()) << n;
  auto p = make_profile(12);
  p.k += 1;
  EXPECT_TRUE(profile_violation(p).has_value());
}

TEST(LemmaCases, Residue) {
  EXPECT_EQ(residue_case(5, 0, 0)->label, "i");
  EXPECT_EQ(residue_case(6, 1, 0)->label, "ii");
  EXPECT_EQ(residue_case(4, 1, 1)->label, "v.1");
  EXPECT_EQ(residue_case(5, 1, 3)->label, "vi");
  EXPECT_EQ(residue_case(8, 2, 22)->label, "vii");
  const auto iii = residue_case(7, 2, 11);
  ASSERT_TRUE(iii.has_value());
  EXPECT_EQ(iii->label, "iii");
  EXPECT_EQ(iii->y_prime, 12);
  EXPECT_FALSE(residue_case(4, 1, 2).has_value());
  EXPECT_FALSE(residue_case(8, 2, 26).has_value());  // bound is 24
  EXPECT_EQ(guard_of([] { (void)residue_case(2, 0, 0); }), "m >= 3");
  EXPECT_EQ(guard_of([] { (void)residue_case(5, 3, 0); }), "0 <= x <= floor((m-1)/2)");
}

TEST(LemmaCases, Trace) {
  EXPECT_EQ(trace_case(3, 1, 0)->label, "i");
  EXPECT_EQ(trace_case(4, 1, 2)->label, "iv");
  EXPECT_EQ(trace_case(5, 2, 4)->label, "v");
  EXPECT_EQ(trace_case(7, 2, 14)->label, "vi");
  EXPECT_EQ(trace_case(5, 1, 4)->label, "ii");
  EXPECT_FALSE(trace_case(7, 2, 16).has_value());
  EXPECT_EQ(guard_of([] { (void)trace_case(3, 0, 2); }), "m >= 4");
}

TEST(LemmaValues, Residue) {
  for (unsigned m = 3; m <= 6; ++m) {
    const auto r = residue_lemma_check({m, 0, 0}, cfg());
    EXPECT_EQ(r.value, 1u << m);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(residue_lemma_check({m, 1, 0}, cfg()).value, (1u << m) - 2 * m);
  }
  EXPECT_EQ(residue_lemma_check({4, 1, 1}, cfg()).value, 3u);
  EXPECT_EQ(residue_lemma_check({5, 1, 3}, cfg()).value, 4u);
  const auto vii = residue_lemma_check({6, 2, 4}, cfg());
  EXPECT_EQ(vii.value, 64u - 24 - 28);
  EXPECT_TRUE(vii.pass());
  EXPECT_EQ(guard_of([] { (void)residue_lemma_check({4, 1, 2}, cfg()); }), "residue lemma case (i)-(vii)");
  const auto outside = residue_lemma_eval({4, 1, 2}, cfg());
  EXPECT_FALSE(outside.covered.has_value());
  EXPECT_TRUE(outside.pass());
}

TEST(LemmaValues, ResidueV2) {
  EXPECT_EQ(residue_lemma_v2_check(cfg()).value, 1u);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SamplingConfig c = cfg(seed);
    c.trials = 1;
    EXPECT_EQ(residue_lemma_v2_check(c).value, 1u) << seed;
  }
}

TEST(LemmaValues, Trace) {
  for (unsigned m = 3; m <= 6; ++m) EXPECT_EQ(trace_lemma_check({m, 1, 0}, cfg()).value, (1u << m) - 4);
  EXPECT_EQ(trace_lemma_check({4, 1, 2}, cfg()).value, 2u);
  EXPECT_EQ(trace_lemma_check({5, 2, 4}, cfg()).value, 0u);
  EXPECT_EQ(trace_lemma_check({6, 2, 6}, cfg()).value, 64u - 8 - 42);
}

TEST(LemmaValues, LowerBoundsEverywhereInRange) {
  SamplingConfig c = cfg(5);
  c.trials = 1;
  for (unsigned m = 4; m <= 5; ++m)
    for (unsigned x = 0; 2 * x + 1 <= m; ++x)
      for (unsigned y = 0; y <= 6; ++y) {
        EXPECT_TRUE(residue_lemma_eval({m, x, y}, c).pass()) << m << x << y;
        EXPECT_TRUE(trace_lemma_eval({m, x, y}, c).pass()) << m << x << y;
      }
}

TEST(FixedComponent, Branches) {
  const auto full = fixed_component_check(2, 3, 2, cfg());
  EXPECT_TRUE(full.full);
  EXPECT_EQ(full.dim, 0u);
  EXPECT_TRUE(full.pass);
  const auto line = fixed_component_check(1, 2, 3, cfg());
  EXPECT_EQ(line.dim, 12u);
  EXPECT_EQ(line.with_component, 12u);
  EXPECT_LT(line.with_extra, 12u);
  EXPECT_TRUE(line.pass);
  EXPECT_TRUE(fixed_component_check(1, 2, 2, cfg()).pass);
  EXPECT_TRUE(fixed_component_check(3, 4, 3, cfg()).pass);
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned m = i + 1; m <= i + 2; ++m) EXPECT_TRUE(fixed_component_check(i, m, n, cfg()).pass);
  EXPECT_EQ(guard_of([] { (void)fixed_component_check(2, 2, 3, cfg()); }), "m > i");
  EXPECT_EQ(guard_of([] { (void)fixed_component_check(4, 5, 3, cfg()); }), "1 <= i <= n");
}

TEST(Substitution, Instances) {
  const auto r = substitution_check(3, 1, cfg());
  EXPECT_EQ(r.dim_y, 8u);
  EXPECT_EQ(r.dim_double, 4u);
  EXPECT_EQ(r.dim_pairs, 6u);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.pass());
  const auto none = substitution_check(3, 0, cfg());
  EXPECT_EQ(none.dim_pairs, none.dim_y);
  const auto four = substitution_check(4, 1, cfg());
  EXPECT_EQ(four.dim_y, 16u);
  EXPECT_EQ(four.dim_pairs, 14u);
  EXPECT_TRUE(substitution_check(5, 2, cfg()).pass());
  segsec::fat::SchemeSpec y;
  y.ambient = 3;
  y.degree = 3;
  EXPECT_EQ(guard_of([&] { (void)substitution_check(y, {"H9"}, cfg()); }), "planes registered in Y");
}

TEST(Castelnuovo, TrivialCases) {
  const PrimeField f;
  const auto pi = Hyperplane::from_form(f, {0, 0, 0, 1});
  Scheme off(f, 3);
  off.add_point({1, 2, 3, 4}, 2);
  off.add_point({1, 5, 3, 7}, 2);
  const auto r = castelnuovo_bound(off, pi, 3);
  EXPECT_EQ(r.trace_dim, 10u);  // C(3+2, 2)
  EXPECT_EQ(r.res_dim, segsec::fat::ideal_dim(off, 2));
  EXPECT_TRUE(r.holds());
  Scheme in(f, 3);
  in.add_point({1, 2, 3, 0}, 2);
  in.add_point({0, 1, 3, 0}, 3);
  const auto res = segsec::fat::residual(in, pi);
  EXPECT_EQ(res.points()[0].mult, 1u);
  EXPECT_EQ(res.points()[1].mult, 2u);
  EXPECT_TRUE(castelnuovo_bound(in, pi, 3).holds());
  EXPECT_EQ(ideal_dim_any(in, 0), 0u);
  EXPECT_EQ(ideal_dim_any(Scheme(f, 3), 0), 1u);
  EXPECT_EQ(ideal_dim_any(in, 2), 0u);
}

TEST(Castelnuovo, Fuzz) {
  const PrimeField f;
  for (unsigned n = 3; n <= 4; ++n)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      auto [x, pi] = segsec::testing::castelnuovo_instance(n, 3, f, Rng(Seed{seed}).split(n));
      const auto r = castelnuovo_bound(x, pi, 3);
      EXPECT_TRUE(r.holds()) << n << " " << seed << ": " << r.direct << " > " << r.bound;
    }
}

TEST(Lemzero, CoordinatePointsOnly) {
  const PrimeField f;
  for (unsigned n = 3; n <= 6; ++n) {
    Scheme x(f, n);
    for (unsigned i = 1; i <= n; ++i) x.add_coordinate_point(i, n - 1);
    std::vector<Elem> form(n + 1, 0);
    form[0] = 3;
    form[1] = 5;
    const auto r = lemzero_bound(x, Hyperplane::from_form(f, form));
    EXPECT_EQ(r.w_dim, 1u << (n - 1));
    EXPECT_EQ(r.t_dim, 1u << (n - 1));
    EXPECT_EQ(r.direct, 1u << n);
    EXPECT_TRUE(r.holds());
  }
}

TEST(Lemzero, TraceLemmaPlane) {
  const PrimeField f;
  Rng rng(Seed{4});
  for (unsigned n = 4; n <= 6; ++n) {
    Scheme x(f, n);
    for (unsigned i = 1; i <= n; ++i) x.add_coordinate_point(i, n - 1);
    PrimeMatrix plane(f, n + 1);
    std::vector<Elem> e(n + 1, 0);
    e[2] = 1;
    plane.append_row(e);
    e[2] = 0;
    e[3] = 1;
    plane.append_row(e);
    plane.append_row(segsec::la::random_projective_point(n, f, rng));
    x.add_linear(plane, 1);
    std::vector<Elem> form(n + 1, 0);
    form[0] = 7;
    form[1] = 2;
    const auto r = lemzero_bound(x, Hyperplane::from_form(f, form));
    EXPECT_EQ(r.bound, (1u << n) - 4);
    EXPECT_EQ(r.direct, (1u << n) - 4);
  }
}

TEST(Lemzero, Guards) {
  const PrimeField f;
  Scheme x(f, 3);
  x.add_coordinate_point(1, 2);
  x.add_coordinate_point(2, 2);
  EXPECT_EQ(guard_of([&] { (void)lemzero_bound(x, Hyperplane::from_form(f, {1, 1, 0, 0})); }),
            "X contains (n-1)Q_1 + ... + (n-1)Q_n");
  x.add_coordinate_point(3, 2);
  EXPECT_EQ(guard_of([&] { (void)lemzero_bound(x, Hyperplane::from_form(f, {1, 0, 0, 0})); }), "Q_1 not on Π");
  EXPECT_EQ(guard_of([&] { (void)lemzero_bound(x, Hyperplane::from_form(f, {0, 1, 1, 0})); }), "Π through Q_2..Q_n");
}

TEST(Lemzero, Fuzz) {
  const PrimeField f;
  for (unsigned n = 3; n <= 5; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      auto [x, pi] = segsec::testing::lemzero_instance(n, f, Rng(Seed{seed}).split(100 + n));
      const auto r = lemzero_bound(x, pi);
      EXPECT_TRUE(r.holds()) << n << " " << seed;
    }
}

TEST(Certificate, SettleRules) {
  CertificateNode leaf;
  leaf.settle(true);
  EXPECT_EQ(leaf.status, Status::Verified);
  CertificateNode parent;
  parent.children = {leaf, leaf};
  parent.children[1].status = Status::BoundOnly;
  parent.settle(true);
  EXPECT_EQ(parent.status, Status::BoundOnly);
  parent.children[0].status = Status::Failed;
  parent.settle(true);
  EXPECT_EQ(parent.status, Status::Failed);
  parent.children.clear();
  parent.settle(false);
  EXPECT_EQ(parent.status, Status::Failed);
  EXPECT_EQ(to_string(Rule::AppendixArithmetic), "appendix-arithmetic");
}

TEST(Certificate, SmallCases) {
  const auto c = main_theorem_certify(5, 5);
  EXPECT_EQ(c.claimed, 2);
  EXPECT_EQ(c.status, Status::Verified);
  EXPECT_EQ(c.rule, Rule::Lemzero);
  EXPECT_GE(c.size(), 10u);
  EXPECT_EQ(to_json(c), to_json(main_theorem_certify(5, 5)));
  const auto six = main_theorem_certify(6, 9);
  EXPECT_EQ(six.claimed, 1);
  EXPECT_EQ(six.status, Status::Verified);
}

TEST(Certificate, CapMakesBoundOnly) {
  CertifyOptions opts;
  opts.cap = 1;
  const auto c = main_theorem_certify(5, 5, opts);
  EXPECT_EQ(c.status, Status::BoundOnly);
  EXPECT_EQ(c.claimed, 2);
}

TEST(Certificate, Guards) {
  EXPECT_EQ(guard_of([] { (void)main_theorem_certify(4, 3); }), "(n, s) != (4, 3)");
  EXPECT_EQ(guard_of([] { (void)main_theorem_certify(4, 1); }), "n >= 5");
  EXPECT_EQ(guard_of([] { (void)main_theorem_certify(6, 10); }), "s odd");
  EXPECT_EQ(guard_of([] { (void)main_theorem_certify(6, 7); }), "s in {e, e*}");
}

TEST(Certificate, JsonShape) {
  CertifyOptions opts;
  opts.cap = 1;
  const auto p = make_profile(40);
  const std::string j = to_json(main_theorem_certify(40, is_odd(p.e) ? p.e : p.e_star, opts));
  EXPECT_NE(j.find("\"rule\": \"lemzero\""), std::string::npos);
  EXPECT_NE(j.find("\"status\": \"bound-only\""), std::string::npos);
  EXPECT_EQ(j.back(), '\n');
}

TEST(Appendix, FullSweep) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = appendix_check(5, 64);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(rep.first_violation().has_value());
  EXPECT_LT(secs, 1.0);
  auto has = [&](unsigned n, const std::string& label) {
    return std::any_of(rep.rows.begin(), rep.rows.end(), [&](const AppendixRow& r) { return r.n == n && r.label == label && r.holds; });
  };
  EXPECT_TRUE(has(9, "n=9: y = 22"));
  EXPECT_TRUE(has(9, "n=9: floor((2^m-2mx)/(m+1)) = 24"));
  EXPECT_TRUE(has(8, "n=8: y = 11"));
  EXPECT_TRUE(has(8, "n=8: floor((2^m-4x)/(m+1)) = 15"));
  EXPECT_TRUE(has(5, "0 <= k + r - 1"));
  EXPECT_TRUE(has(40, "(3n+8)(n+1) <= 2^n") || has(40, "4(n+2)(n+1) <= 2^n"));
}

TEST(Appendix, LargeAndGuards) {
  EXPECT_TRUE(appendix_check(1000, 1010).passed());
  EXPECT_EQ(guard_of([] { (void)appendix_check(4, 10); }), "5 <= n_min <= n_max <= 4096");
  EXPECT_EQ(guard_of([] { (void)appendix_check(10, 9); }), "5 <= n_min <= n_max <= 4096");
  EXPECT_EQ(guard_of([] { (void)appendix_check(5, 5000); }), "5 <= n_min <= n_max <= 4096");
  // A mutated row is caught: n=9 residue needs y <= 24, so y = 26 is uncovered.
  EXPECT_FALSE(residue_case(8, 2, 26).has_value());
}
