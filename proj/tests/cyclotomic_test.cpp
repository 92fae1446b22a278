#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "rooth/cyclotomic.hpp"

namespace rooth {
namespace {

CycElement random_element(std::mt19937& rng, int max_m = 5) {
  std::uniform_int_distribution<int> m_dist(0, max_m), c_dist(-8, 8);
  const int m = m_dist(rng);
  std::vector<std::int64_t> c(CycElement::half_period(m));
  for (auto& v : c) v = c_dist(rng);
  return CycElement(m, std::move(c));
}

TEST(ZetaPow, SmallOrders) {
  EXPECT_EQ(zeta_pow(0, 0), CycElement(1));
  EXPECT_EQ(zeta_pow(0, 7), CycElement(1));
  EXPECT_EQ(zeta_pow(2, 1), CycElement(2, {0, 1}));   // i
  EXPECT_EQ(zeta_pow(2, 2), CycElement(2, {-1, 0}));  // -1
  EXPECT_EQ(zeta_pow(3, 4), CycElement(3, {-1, 0, 0, 0}));
  EXPECT_EQ(zeta_pow(3, -1), zeta_pow(3, 7));
}

TEST(Arithmetic, AbsSqExamples) {
  // |1 + i|^2 = 2
  const CycElement one_i = CycElement(1) + zeta_pow(2, 1);
  EXPECT_EQ(one_i.abs_sq(), CycElement(2).lift(2));
  // |zeta_8|^2 = 1
  EXPECT_EQ(zeta_pow(3, 1).abs_sq(), CycElement(1).lift(3));
  // |1 + zeta_8|^2 = 2 + zeta_8 - zeta_8^3
  const CycElement v = (CycElement(1).lift(3) + zeta_pow(3, 1)).abs_sq();
  EXPECT_EQ(v, CycElement(3, {2, 1, 0, -1}));
}

TEST(Arithmetic, ConjIsRingAutomorphism) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_element(rng), b = random_element(rng);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(a.conj().conj(), a);
  }
}

TEST(Arithmetic, RingAxiomsSpotChecks) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(rng), b = random_element(rng), c = random_element(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + (-a), CycElement(0));
  }
}

TEST(Arithmetic, MultiplicationMatchesComplexEmbedding) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = random_element(rng), b = random_element(rng);
    const auto lhs = (a * b).to_complex();
    const auto rhs = a.to_complex() * b.to_complex();
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9);
  }
}

TEST(Arithmetic, AbsSqIsRealAndMatchesNorm) {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_element(rng);
    const auto sq = a.abs_sq();
    EXPECT_EQ(sq, sq.conj());
    EXPECT_NEAR(sq.to_complex().imag(), 0.0, 1e-12);
    EXPECT_NEAR(sq.to_complex().real(), std::norm(a.to_complex()), 1e-9);
  }
}

TEST(Lift, PreservesComplexValue) {
  EXPECT_EQ(zeta_pow(2, 1).lift(3), zeta_pow(3, 2));  // i = zeta_8^2
  EXPECT_EQ(CycElement(5).lift(4), CycElement(4, {5, 0, 0, 0, 0, 0, 0, 0}));
  std::mt19937 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_element(rng, 4);
    const auto lifted = a.lift(a.order_exponent() + 1 + static_cast<int>(rng() % 2));
    EXPECT_NEAR(std::abs(a.to_complex() - lifted.to_complex()), 0.0, 1e-12);
  }
  EXPECT_THROW(zeta_pow(3, 1).lift(2), std::invalid_argument);
}

TEST(ToComplex, KnownPoints) {
  const auto z = (CycElement(1).lift(2) + zeta_pow(2, 1)).to_complex();
  EXPECT_NEAR(z.real(), 1.0, 1e-12);
  EXPECT_NEAR(z.imag(), 1.0, 1e-12);
  const auto w = zeta_pow(3, 1).to_complex();
  EXPECT_NEAR(w.real(), std::sqrt(2.0) / 2, 1e-12);
  EXPECT_NEAR(w.imag(), std::sqrt(2.0) / 2, 1e-12);
}

TEST(TimesZetaPow, AgreesWithMultiplication) {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_element(rng);
    const std::int64_t e = static_cast<std::int64_t>(rng() % 64) - 32;
    EXPECT_EQ(a.times_zeta_pow(e), a * zeta_pow(a.order_exponent(), e));
  }
}

TEST(DivExact, ChecksDivisibility) {
  EXPECT_EQ(CycElement(8).div_exact_pow2(3), CycElement(1));
  EXPECT_THROW(CycElement(6).div_exact_pow2(2), std::domain_error);
  EXPECT_EQ(CycElement(2, {4, -8}).div_exact_pow2(2), CycElement(2, {1, -2}));
}

TEST(Integers, RationalDetection) {
  EXPECT_TRUE(CycElement(2, {7, 0}).is_rational_integer());
  EXPECT_FALSE(CycElement(2, {7, 1}).is_rational_integer());
  EXPECT_EQ(CycElement(2, {7, 0}).integer_value(), 7);
  EXPECT_THROW(CycElement(2, {0, 1}).integer_value(), std::domain_error);
}

}  // namespace
}  // namespace rooth
