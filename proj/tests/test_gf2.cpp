#include <random>

#include <gtest/gtest.h>

#include "stslab/gf2.hpp"

using stslab::BinaryMatrix;
using stslab::BitVec;

namespace {

BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  BinaryMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
  return m;
}

// Plain Gaussian elimination on vectors of bools.
std::size_t naive_rank(const BinaryMatrix& m) {
  std::vector<std::vector<bool>> a(m.n_rows(), std::vector<bool>(m.n_cols));
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols; ++j) a[i][j] = m.get(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.n_cols && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && !a[piv][col]) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != rank && a[i][col])
        for (std::size_t j = 0; j < m.n_cols; ++j) a[i][j] = a[i][j] != a[rank][j];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Gf2, RankSmallCases) {
  EXPECT_EQ(stslab::gf2_rank(BinaryMatrix::identity(3)), 3u);
  BinaryMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.set(i, j);
  EXPECT_EQ(stslab::gf2_rank(m), 1u);
}

TEST(Gf2, RankMatchesNaiveElimination) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 12, 20, t % 2 ? 0.5 : 0.15);
    const auto r = stslab::gf2_rank(m);
    EXPECT_EQ(r, naive_rank(m));
    EXPECT_LE(r, 12u);
  }
  // Word boundaries.
  for (int t = 0; t < 20; ++t) {
    const auto m = random_matrix(rng, 70, 130, 0.1);
    EXPECT_EQ(stslab::gf2_rank(m), naive_rank(m));
  }
}

TEST(Gf2, KernelSmallCases) {
  EXPECT_EQ(stslab::gf2_kernel(BinaryMatrix::identity(4)).n_rows(), 0u);
  EXPECT_EQ(stslab::gf2_kernel(BinaryMatrix(3, 4)).n_rows(), 4u);
  EXPECT_EQ(stslab::gf2_kernel(BinaryMatrix(4)).n_rows(), 4u);
}

TEST(Gf2, KernelVectorsAnnihilateAndSpan) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 15, 1 + rng() % 90, 0.3);
    const auto k = stslab::gf2_kernel(m);
    EXPECT_EQ(k.n_rows(), m.n_cols - stslab::gf2_rank(m));
    for (const auto& v : k.rows) EXPECT_TRUE(m.apply(v).none());
    EXPECT_EQ(stslab::gf2_rank(k), k.n_rows());
  }
}

TEST(Gf2, SolveSmallCases) {
  std::mt19937_64 rng(3);
  BitVec b(5);
  b.set(1);
  b.set(4);
  EXPECT_EQ(*stslab::gf2_solve(BinaryMatrix::identity(5), b), b);
  EXPECT_FALSE(stslab::gf2_solve(BinaryMatrix(5, 5), b).has_value());
}

TEST(Gf2, SolveConsistentRandomSystems) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const auto m = random_matrix(rng, 1 + rng() % 20, 1 + rng() % 80, 0.3);
    BitVec x(m.n_cols);
    for (std::size_t j = 0; j < m.n_cols; ++j) x.set(j, rng() & 1);
    const BitVec b = m.apply(x);
    const auto sol = stslab::gf2_solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
}

TEST(Gf2, SolveDetectsInconsistency) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng, 20, 8, 0.4);
    BitVec b(20);
    for (std::size_t j = 0; j < 20; ++j) b.set(j, rng() & 1);
    BinaryMatrix aug = m.transpose();
    aug.push_back(b);
    const bool consistent = stslab::gf2_rank(aug) == stslab::gf2_rank(m);
    EXPECT_EQ(stslab::gf2_solve(m, b).has_value(), consistent);
  }
}

TEST(Gf2, RowEchelonExpressReturnsCertificate) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto m = random_matrix(rng, 15, 40, 0.2);
    stslab::RowEchelon e(40);
    for (const auto& r : m.rows) e.insert(r);
    EXPECT_EQ(e.rank(), stslab::gf2_rank(m));
    // Random combination of inserted rows.
    BitVec v(40);
    for (const auto& r : m.rows)
      if (rng() & 1) v ^= r;
    const auto combo = e.express(v);
    ASSERT_TRUE(combo.has_value());
    BitVec back(40);
    for (auto i : *combo) back ^= m.rows[i];
    EXPECT_EQ(back, v);
  }
}

TEST(Gf2, TransposeTwiceIsIdentity) {
  std::mt19937_64 rng(7);
  const auto m = random_matrix(rng, 9, 70);
  EXPECT_EQ(m.transpose().transpose(), m);
}
