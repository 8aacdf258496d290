#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "stslab/errors.hpp"
#include "stslab/pauli.hpp"

using stslab::PauliOperator;

namespace {

std::string letters(const PauliOperator& p) {
  std::string s;
  for (std::size_t q = 0; q < p.n_qubits(); ++q) s += p.at(q);
  return s;
}

PauliOperator random_pauli(std::mt19937_64& rng, std::size_t n) {
  static const char kLetters[] = "IXYZ";
  PauliOperator p(n);
  for (std::size_t q = 0; q < n; ++q) p.set(q, kLetters[rng() % 4]);
  p.set_phase(static_cast<int>(rng() % 4));
  return p;
}

oracle::Mat dense(const PauliOperator& p) { return oracle::pauli(letters(p), p.phase()); }

}  // namespace

TEST(Pauli, ParseAndPrintRoundTrip) {
  for (const std::string s : {"XIZY", "+iXX", "-ZZ", "-iY", "IIII"}) EXPECT_EQ(PauliOperator::parse(s).to_string(), s);
  EXPECT_EQ(PauliOperator::parse("+XZ").to_string(), "XZ");
  EXPECT_EQ(PauliOperator::parse("−XZ").to_string(), "-XZ");
  EXPECT_THROW(PauliOperator::parse("XQ"), std::invalid_argument);
}

TEST(Pauli, XTimesZIsMinusIY) {
  const auto p = PauliOperator::parse("X") * PauliOperator::parse("Z");
  EXPECT_TRUE(p.x().get(0));
  EXPECT_TRUE(p.z().get(0));
  EXPECT_EQ(p.phase(), 3);
  EXPECT_EQ(p.at(0), 'Y');
}

TEST(Pauli, SquareIsIdentityWithRealSign) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_pauli(rng, 6);
    const auto sq = p * p;
    EXPECT_TRUE(sq.is_identity_up_to_phase());
    EXPECT_EQ(sq.phase() % 2, 0);
    // Hermitian operators square to +I.
    if (p.is_hermitian()) EXPECT_EQ(sq.phase(), 0);
    else EXPECT_EQ(sq.phase(), 2);
  }
}

TEST(Pauli, MultiplyMatchesDenseMatrices) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 3; ++n)
    for (int t = 0; t < 200; ++t) {
      const auto a = random_pauli(rng, n), b = random_pauli(rng, n);
      const oracle::Mat expect = dense(a) * dense(b);
      EXPECT_LT((dense(stslab::multiply(a, b)) - expect).norm(), 1e-12) << a.to_string() << " " << b.to_string();
    }
}

TEST(Pauli, EightQubitProductsMatchPerFactorOracle) {
  // Per-site 2×2 products multiply to the full tensor product, so checking each site suffices.
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto a = random_pauli(rng, 8), b = random_pauli(rng, 8);
    const auto ab = a * b;
    std::complex<double> scale = oracle::pauli("I", a.phase())(0, 0) * oracle::pauli("I", b.phase())(0, 0);
    for (std::size_t q = 0; q < 8; ++q) {
      const oracle::Mat site = oracle::single(a.at(q)) * oracle::single(b.at(q));
      const oracle::Mat target = oracle::single(ab.at(q));
      // site = c · target for a unit c.
      const auto c = (target.adjoint() * site).trace() / 2.0;
      EXPECT_LT((site - c * target).norm(), 1e-12);
      scale *= c;
    }
    EXPECT_LT(std::abs(scale - oracle::pauli("I", ab.phase())(0, 0)), 1e-12);
  }
}

TEST(Pauli, SymplecticProductMatchesCommutator) {
  EXPECT_TRUE(symplectic_product(PauliOperator::parse("XI"), PauliOperator::parse("ZI")));
  EXPECT_FALSE(symplectic_product(PauliOperator::parse("XI"), PauliOperator::parse("IZ")));
  EXPECT_FALSE(symplectic_product(PauliOperator::parse("XX"), PauliOperator::parse("ZZ")));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    const auto a = random_pauli(rng, 3), b = random_pauli(rng, 3);
    const bool commute = (dense(a) * dense(b) - dense(b) * dense(a)).norm() < 1e-12;
    EXPECT_EQ(stslab::symplectic_product(a, b), !commute);
    EXPECT_EQ(stslab::symplectic_product(a.symplectic(), b.symplectic()), !commute);
  }
}

TEST(Pauli, HermiticityMatchesAdjoint) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_pauli(rng, 2);
    const bool herm = (dense(a) - dense(a).adjoint()).norm() < 1e-12;
    EXPECT_EQ(a.is_hermitian(), herm) << a.to_string();
  }
}

TEST(Pauli, Weight) {
  EXPECT_EQ(weight(PauliOperator::identity(5)), 0u);
  EXPECT_EQ(weight(PauliOperator::parse("XIZI")), 2u);
  EXPECT_EQ(weight(PauliOperator::parse("Y")), 1u);
  EXPECT_EQ(PauliOperator::parse("XIZY").support(), (std::vector<std::size_t>{0, 2, 3}));
}

TEST(Pauli, SizeMismatchThrows) {
  EXPECT_THROW(multiply(PauliOperator::parse("X"), PauliOperator::parse("XX")), stslab::DimensionError);
  EXPECT_THROW(symplectic_product(PauliOperator::parse("X"), PauliOperator::parse("XX")), stslab::DimensionError);
}

TEST(Pauli, SymplecticRoundTrip) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    auto a = random_pauli(rng, 7);
    a.set_phase(0);
    EXPECT_EQ(PauliOperator::from_symplectic(a.symplectic()), a);
  }
}
