#include <gtest/gtest.h>

#include "segsec/errors.hpp"
#include "segsec/la/rank.hpp"
#include "segsec/la/rational.hpp"
#include "segsec/segre/terracini.hpp"

using namespace segsec::segre;
using segsec::la::Seed;

namespace {

FactorPoint point(std::initializer_list<std::array<Elem, 2>> pairs) { return FactorPoint{pairs}; }

SamplingConfig config(std::size_t trials, std::uint64_t seed = 7) {
  SamplingConfig cfg;
  cfg.trials = trials;
  cfg.seed = Seed{seed};
  return cfg;
}

// Integer Segre vector by the product formula, independent of the library's doubling loop.
std::vector<std::int64_t> int_segre(const std::vector<std::array<std::int64_t, 2>>& pt) {
  const std::size_t n = pt.size();
  std::vector<std::int64_t> v(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < v.size(); ++mask) {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= pt[i][(mask >> i) & 1];
    v[mask] = prod;
  }
  return v;
}

}  // namespace

TEST(ExpectedDim, Examples) {
  EXPECT_EQ(expected_dim(4, 3), 14u);
  for (unsigned n = 1; n <= 20; ++n) EXPECT_EQ(expected_dim(n, 1), n);
  EXPECT_EQ(expected_dim(5, 5), 29u);
  EXPECT_EQ(expected_dim(5, 6), 31u);
  EXPECT_EQ(expected_dim(62, ~std::uint64_t{0}), (std::uint64_t{1} << 62) - 1);
  EXPECT_THROW((void)expected_dim(63, 1), segsec::GuardViolation);
  EXPECT_THROW((void)expected_dim(0, 1), segsec::GuardViolation);
  EXPECT_THROW((void)expected_dim(3, 0), segsec::GuardViolation);
}

TEST(SegreCoordinates, Examples) {
  const PrimeField f;
  const auto e0 = segre_coordinates(point({{1, 0}, {1, 0}}), f);
  EXPECT_EQ(e0, (std::vector<Elem>{1, 0, 0, 0}));
  EXPECT_EQ(segre_coordinates(point({{5, 9}}), f), (std::vector<Elem>{5, 9}));
  EXPECT_EQ(segre_coordinates(point({{1, 1}, {1, 1}, {1, 1}}), f), std::vector<Elem>(8, 1));
  // Bit i <-> factor i+1: slot 1 = b_1 a_2, slot 2 = a_1 b_2.
  EXPECT_EQ(segre_coordinates(point({{2, 3}, {5, 7}}), f), (std::vector<Elem>{10, 15, 14, 21}));
}

TEST(SegreCoordinates, MultiplicativeAcrossSplit) {
  const PrimeField f;
  Rng rng(Seed{11});
  for (unsigned n1 = 1; n1 <= 4; ++n1)
    for (unsigned n2 = 1; n2 <= 4; ++n2) {
      const FactorPoint a = random_factor_point(n1, f, rng), b = random_factor_point(n2, f, rng);
      FactorPoint ab = a;
      ab.pairs.insert(ab.pairs.end(), b.pairs.begin(), b.pairs.end());
      const auto va = segre_coordinates(a, f), vb = segre_coordinates(b, f), vab = segre_coordinates(ab, f);
      for (std::size_t lo = 0; lo < va.size(); ++lo)
        for (std::size_t hi = 0; hi < vb.size(); ++hi)
          EXPECT_EQ(vab[lo | (hi << n1)], f.mul(va[lo], vb[hi]));
    }
}

TEST(TangentRows, Examples) {
  const PrimeField f;
  const PrimeMatrix t = tangent_rows(point({{1, 0}, {1, 0}}), f);
  EXPECT_EQ(t, PrimeMatrix::from_rows(f, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  const PrimeMatrix one = tangent_rows(point({{3, 4}}), f);
  EXPECT_EQ(one, PrimeMatrix::from_rows(f, {{3, 4}, {0, 1}}));
  EXPECT_EQ(segsec::la::rank(one), 2u);
  EXPECT_EQ(segsec::la::rank(tangent_rows(point({{0, 5}}), f)), 2u);  // direction switches to (1,0)
}

TEST(TangentRows, FullRankAtSamples) {
  const PrimeField f;
  Rng rng(Seed{12});
  for (unsigned n = 1; n <= 10; ++n)
    for (int i = 0; i < 5; ++i) EXPECT_EQ(segsec::la::rank(tangent_rows(random_factor_point(n, f, rng), f)), n + 1);
}

TEST(Terracini, RationalOracleThreeTwo) {
  // Hand-picked integer points; tangent directions (0,1) since every a_i != 0.
  const std::vector<std::vector<std::array<std::int64_t, 2>>> pts{{{1, 2}, {1, 3}, {2, 1}},
                                                                  {{1, -1}, {3, 1}, {1, 4}}};
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& pt : pts) {
    rows.push_back(int_segre(pt));
    for (std::size_t i = 0; i < pt.size(); ++i) {
      auto moved = pt;
      moved[i] = {0, 1};
      rows.push_back(int_segre(moved));
    }
  }
  EXPECT_EQ(segsec::la::rational_rank(rows), 8u);
  // Same matrix through the library path.
  const PrimeField f;
  PrimeMatrix m(f, 8);
  for (const auto& pt : pts) {
    FactorPoint fp;
    for (const auto& pr : pt) fp.pairs.push_back({f.from_signed(pr[0]), f.from_signed(pr[1])});
    m.append_rows(tangent_rows(fp, f));
  }
  EXPECT_EQ(m, PrimeMatrix::from_rows(f, rows));
  const auto res = segsec::la::multi_prime_rank(
      [](const PrimeField& fld, Rng& rng) { return terracini_matrix(3, 2, fld, rng); }, config(3));
  EXPECT_EQ(res.rank, 8u);
}

TEST(Terracini, SmallReports) {
  const auto r32 = secant_dim_sample({3, 2}, config(3));
  EXPECT_EQ(r32.observed, 7u);
  EXPECT_EQ(r32.defect, 0u);
  EXPECT_EQ(r32.ideal_dim, 0u);
  EXPECT_EQ(r32.cell_dims.size(), 9u);
  EXPECT_EQ(r32.cells_agreeing, 9u);
  EXPECT_FALSE(r32.defect_confirmed());

  const auto r43 = secant_dim_sample({4, 3}, config(3));
  EXPECT_EQ(r43.expected, 14u);
  EXPECT_EQ(r43.observed, 13u);
  EXPECT_EQ(r43.defect, 1u);
  EXPECT_EQ(r43.ideal_dim, 2u);
  EXPECT_TRUE(r43.defect_confirmed());
  EXPECT_GT(r43.failure_bound, 0.0);
  EXPECT_LT(r43.failure_bound, 1e-6);

  for (unsigned n = 1; n <= 8; ++n) {
    const auto r = secant_dim_sample({n, 1}, config(1));
    EXPECT_EQ(r.observed, n);
    EXPECT_EQ(r.defect, 0u);
  }
}

TEST(Terracini, IdealDim) {
  EXPECT_EQ(multigraded_ideal_dim({4, 3}, config(3)), 2u);
  EXPECT_EQ(multigraded_ideal_dim({3, 2}, config(3)), 0u);
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(multigraded_ideal_dim({n, 0}, config(1)), 1u << n);
  EXPECT_THROW((void)secant_dim_sample({3, 0}, config(1)), segsec::GuardViolation);
  EXPECT_THROW((void)secant_dim_sample({21, 1}, config(1)), segsec::ResourceLimit);
}

TEST(Terracini, DualityAndBounds) {
  for (unsigned n = 2; n <= 7; ++n)
    for (unsigned s = 1; s <= 6; ++s) {
      const auto r = secant_dim_sample({n, s}, config(2, 100 + n));
      EXPECT_EQ(r.ideal_dim + r.observed, (1u << n) - 1);
      EXPECT_LE(r.observed, r.expected);
      for (auto d : r.cell_dims) EXPECT_LE(d, r.expected);
    }
}

TEST(Terracini, ProfileMatchesSingleSamplesAndIsMonotone) {
  const auto cfg = config(2, 99);
  for (unsigned n : {3u, 4u, 5u, 6u}) {
    const auto prof = secant_dim_profile(n, 8, cfg);
    ASSERT_EQ(prof.size(), 8u);
    for (unsigned s = 1; s <= 8; ++s) {
      const auto single = secant_dim_sample({n, s}, cfg);
      EXPECT_EQ(prof[s - 1].observed, single.observed) << n << "," << s;
      EXPECT_EQ(prof[s - 1].cell_dims, single.cell_dims);
      if (s > 1)
        for (std::size_t c = 0; c < single.cell_dims.size(); ++c)
          EXPECT_LE(prof[s - 2].cell_dims[c], prof[s - 1].cell_dims[c]);
    }
  }
}

TEST(Terracini, Deterministic) {
  const auto a = secant_dim_sample({5, 4}, config(2, 5));
  const auto b = secant_dim_sample({5, 4}, config(2, 5));
  EXPECT_EQ(a.cell_dims, b.cell_dims);
  const PrimeField f;
  EXPECT_EQ(terracini_matrix(5, 4, f, Rng(Seed{1})), terracini_matrix(5, 4, f, Rng(Seed{1})));
}
