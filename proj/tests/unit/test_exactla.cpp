#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "segsec/errors.hpp"
#include "segsec/la/multi_prime.hpp"
#include "segsec/la/rank.hpp"
#include "segsec/la/rational.hpp"

using namespace segsec::la;

namespace {

PrimeMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng) {
  PrimeMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.uniform(f));
  return m;
}

// rows x cols matrix of rank exactly k (with overwhelming probability): product of random factors.
PrimeMatrix low_rank(const PrimeField& f, std::size_t rows, std::size_t cols, std::size_t k, Rng& rng) {
  const PrimeMatrix a = random_matrix(f, rows, k, rng);
  const PrimeMatrix b = random_matrix(f, k, cols, rng);
  PrimeMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Elem acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc = f.add(acc, f.mul(a(r, i), b(i, c)));
      m.set(r, c, acc);
    }
  return m;
}

}  // namespace

TEST(PrimeField, RejectsSmallAndComposite) {
  EXPECT_THROW(PrimeField(7), std::invalid_argument);
  EXPECT_THROW(PrimeField((1u << 20) + 1), std::invalid_argument);  // composite
  EXPECT_THROW(PrimeField(4294967311ull), std::invalid_argument);   // prime but >= 2^31
  for (auto p : kDefaultPrimes) EXPECT_NO_THROW(PrimeField{p});
}

TEST(PrimeField, Arithmetic) {
  const PrimeField f;
  EXPECT_EQ(f.from_signed(-1), f.modulus() - 1);
  EXPECT_EQ(f.mul(f.inv(12345), 12345), 1u);
  EXPECT_EQ(f.pow(3, f.modulus() - 1), 1u);  // Fermat
  EXPECT_EQ(f.add(f.modulus() - 1, 1), 0u);
  EXPECT_EQ(f.sub(0, 1), f.modulus() - 1);
  EXPECT_THROW((void)f.inv(0), std::domain_error);
}

TEST(IsPrime, SmallTable) {
  std::set<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 200; ++n)
    if (is_prime(n)) primes.insert(n);
  std::size_t sieve_count = 0;
  for (std::uint64_t n = 2; n < 200; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) {
      ++sieve_count;
      EXPECT_TRUE(primes.count(n)) << n;
    }
  }
  EXPECT_EQ(primes.size(), sieve_count);
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
}

TEST(Rank, Examples) {
  const PrimeField f;
  EXPECT_EQ(rank(PrimeMatrix::identity(f, 3)), 3u);
  EXPECT_EQ(rank(PrimeMatrix(f, 4, 6)), 0u);
  EXPECT_EQ(rank(PrimeMatrix::from_rows(f, {{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(rank(PrimeMatrix(f, 0, 5)), 0u);
}

TEST(Rank, DoesNotMutateInput) {
  const PrimeField f;
  Rng rng(Seed{1});
  const PrimeMatrix m = random_matrix(f, 20, 30, rng);
  const PrimeMatrix copy = m;
  (void)rank(m);
  (void)rank_profile(m);
  EXPECT_EQ(m, copy);
}

TEST(Rank, LowRankProducts) {
  Rng rng(Seed{2});
  for (auto p : kDefaultPrimes) {
    const PrimeField f(p);
    for (std::size_t k : {0u, 1u, 5u, 17u, 40u, 64u}) {
      const PrimeMatrix m = low_rank(f, 70, 90, k, rng);
      EXPECT_EQ(rank(m), k) << "p=" << p << " k=" << k;
      EXPECT_EQ(rank(m.transpose()), k);
    }
  }
}

TEST(Rank, TransposeAndRowOperations) {
  const PrimeField f;
  Rng rng(Seed{3});
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t rows = 1 + rng.uniform(60), cols = 1 + rng.uniform(60);
    const std::size_t k = rng.uniform(std::min(rows, cols) + 1);
    const PrimeMatrix m = low_rank(f, rows, cols, k, rng);
    const std::size_t r = rank(m);
    EXPECT_EQ(r, rank(m.transpose()));

    std::vector<std::size_t> perm(rows);
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    PrimeMatrix permuted = m.select_rows(perm);
    for (std::size_t i = 0; i < rows; ++i) {
      const Elem s = rng.nonzero(f);
      for (auto& e : permuted.row(i)) e = f.mul(e, s);
    }
    EXPECT_EQ(rank(permuted), r);

    // Append a random combination of existing rows.
    std::vector<Elem> combo(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      const Elem w = rng.uniform(f);
      for (std::size_t c = 0; c < cols; ++c) combo[c] = f.add(combo[c], f.mul(w, m(i, c)));
    }
    PrimeMatrix augmented = m;
    augmented.append_row(combo);
    EXPECT_EQ(rank(augmented), r);
  }
}

TEST(Rank, ProfileMatchesPrefixRanks) {
  const PrimeField f;
  Rng rng(Seed{4});
  PrimeMatrix m = low_rank(f, 50, 40, 25, rng);
  // Repeat some rows so the profile has plateaus in the middle.
  m.append_rows(m.select_rows(std::vector<std::size_t>{3, 7, 11}));
  m.append_rows(random_matrix(f, 10, 40, rng));
  const auto profile = rank_profile(m);
  ASSERT_EQ(profile.size(), m.rows());
  for (std::size_t i = 0; i < m.rows(); i += 7) {
    std::vector<std::size_t> prefix(i + 1);
    std::iota(prefix.begin(), prefix.end(), 0);
    EXPECT_EQ(profile[i], rank(m.select_rows(prefix))) << i;
  }
  EXPECT_EQ(profile.back(), 35u);
}

TEST(Rank, AgreesWithRationalOracle) {
  Rng rng(Seed{5});
  const PrimeField f;
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t rows = 1 + rng.uniform(8), cols = 1 + rng.uniform(8);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    // Small entries with planted dependencies: the last row is the sum of the first two.
    for (auto& r : a)
      for (auto& e : r) e = static_cast<std::int64_t>(rng.uniform(7)) - 3;
    if (rows >= 3)
      for (std::size_t c = 0; c < cols; ++c) a[rows - 1][c] = a[0][c] + a[1][c];
    EXPECT_EQ(rank(PrimeMatrix::from_rows(f, a)), rational_rank(a));
  }
}

TEST(Echelon, KernelAndInverse) {
  const PrimeField f;
  Rng rng(Seed{6});
  const PrimeMatrix m = low_rank(f, 6, 9, 4, rng);
  const PrimeMatrix k = kernel_basis(m);
  EXPECT_EQ(k.rows(), 5u);
  for (std::size_t v = 0; v < k.rows(); ++v)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Elem acc = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), k(v, c)));
      EXPECT_EQ(acc, 0u);
    }
  const PrimeMatrix sq = random_matrix(f, 7, 7, rng);
  const auto inv = inverse(sq);
  ASSERT_TRUE(inv.has_value());
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      Elem acc = 0;
      for (std::size_t c = 0; c < 7; ++c) acc = f.add(acc, f.mul(sq(i, c), (*inv)(c, j)));
      EXPECT_EQ(acc, i == j ? 1u : 0u);
    }
  EXPECT_FALSE(inverse(low_rank(f, 5, 5, 3, rng)).has_value());
}

TEST(Rng, DeterministicAndSplittable) {
  const PrimeField f;
  Rng a(Seed{42}), b(Seed{42});
  EXPECT_EQ(random_projective_point(2, f, a), random_projective_point(2, f, b));
  EXPECT_EQ(Rng(Seed{42}).split(7).next(), Rng(Seed{42}).split(7).next());
  EXPECT_NE(Rng(Seed{42}).split(7).next(), Rng(Seed{42}).split(8).next());
  Rng c(Seed{43});
  Rng d(Seed{42});
  EXPECT_NE(random_projective_point(2, f, c), random_projective_point(2, f, d));
}

TEST(Rng, ProjectivePointShape) {
  const PrimeField f;
  Rng rng(Seed{9});
  EXPECT_EQ(random_projective_point(0, f, rng), std::vector<Elem>{1});
  for (int i = 0; i < 50; ++i) {
    const auto v = random_projective_point(4, f, rng);
    ASSERT_EQ(v.size(), 5u);
    const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    ASSERT_NE(lead, v.end());
    EXPECT_EQ(*lead, 1u);
  }
}

TEST(Rng, UniformStaysInRange) {
  Rng rng(Seed{10});
  std::vector<int> hist(5, 0);
  for (int i = 0; i < 5000; ++i) ++hist[rng.uniform(5)];
  for (int h : hist) EXPECT_GT(h, 800);
}

TEST(MultiPrime, ConstantIdentity) {
  SamplingConfig cfg;
  cfg.trials = 4;
  const auto res = multi_prime_rank([](const PrimeField& f, Rng&) { return PrimeMatrix::identity(f, 2); }, cfg);
  EXPECT_EQ(res.rank, 2u);
  EXPECT_EQ(res.cells.size(), 12u);
}

TEST(MultiPrime, Validation) {
  auto build = [](const PrimeField& f, Rng&) { return PrimeMatrix::identity(f, 1); };
  SamplingConfig cfg;
  cfg.primes = {7};
  EXPECT_THROW((void)multi_prime_rank(build, cfg), std::invalid_argument);
  cfg.primes = {};
  EXPECT_THROW((void)multi_prime_rank(build, cfg), segsec::GuardViolation);
  cfg.primes = {kDefaultPrime};
  cfg.trials = 0;
  EXPECT_THROW((void)multi_prime_rank(build, cfg), segsec::GuardViolation);
}

TEST(MultiPrime, MonotoneInTrialsAndPrimes) {
  // A matrix whose rank is random: each row is kept only with some probability.
  auto build = [](const PrimeField& f, Rng& rng) {
    PrimeMatrix m(f, 6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      if (rng.uniform(2) == 0) m.set(i, i, 1);
    return m;
  };
  SamplingConfig cfg;
  cfg.primes = {kDefaultPrime};
  std::size_t prev = 0;
  for (std::size_t trials = 1; trials <= 8; ++trials) {
    cfg.trials = trials;
    const auto res = multi_prime_rank(build, cfg);
    EXPECT_GE(res.rank, prev);
    prev = res.rank;
  }
  const auto one = multi_prime_rank(build, cfg);
  cfg.primes = {kDefaultPrime, kDefaultPrimes[1]};
  const auto two = multi_prime_rank(build, cfg);
  EXPECT_GE(two.rank, one.rank);
  // Cells of the first prime are unchanged by adding a second.
  for (std::size_t i = 0; i < one.cells.size(); ++i) EXPECT_EQ(two.cells[i].rank, one.cells[i].rank);
}

TEST(MultiPrime, ReportsFailureBound) {
  SamplingConfig cfg;
  const auto res = multi_prime_rank([](const PrimeField& f, Rng&) { return PrimeMatrix::identity(f, 1); }, cfg, 1000);
  EXPECT_EQ(res.degree_bound, 1000u);
  EXPECT_NEAR(res.failure_bound, 1000.0 / 1073741789.0, 1e-15);
}
