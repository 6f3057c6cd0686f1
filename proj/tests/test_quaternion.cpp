#include <gtest/gtest.h>

#include <array>

#include "helpers.hpp"
#include "oracle.hpp"
#include "qframe/errors.hpp"
#include "qframe/quaternion.hpp"

using namespace qframe;
using fixtures::kEps;
using fixtures::near;

TEST(QuaternionTable, UnitProductsFollowHamiltonRules) {
  const std::array<Quaternion, 4> u{kOne, kI, kJ, kK};
  // expected[a][b] = u[a] * u[b]
  const std::array<std::array<Quaternion, 4>, 4> expected{{
      {kOne, kI, kJ, kK},
      {kI, -kOne, kK, -kJ},
      {kJ, -kK, -kOne, kI},
      {kK, kJ, -kI, -kOne},
  }};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) EXPECT_EQ(qmul(u[a], u[b]), expected[a][b]) << a << "," << b;
}

TEST(QuaternionTable, AgreesWithLeftMultiplicationOracle) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_TRUE(near(p * q, oracle::mul(p, q), 1e-14 * (1 + p.norm() * q.norm())));
  }
}

TEST(QuaternionMul, Examples) {
  EXPECT_EQ(kI * kJ, kK);
  const Quaternion q{1.5, -2.0, 0.25, 3.0};
  EXPECT_EQ(q * kOne, q);
  EXPECT_EQ((kOne + kI) * (kOne + kJ), (Quaternion{1, 1, 1, 1}));
}

TEST(QuaternionMul, Noncommutative) {
  EXPECT_GT((kI * kJ - kJ * kI).norm(), 0.0);
}

TEST(QuaternionMul, RealScalarsCommute) {
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    const Quaternion q = random_quaternion(rng);
    const Quaternion r{random_quaternion(rng).w};
    EXPECT_EQ(q * r, r * q);
  }
}

TEST(QuaternionMul, AssociativeWithinRoundoff) {
  Rng rng(3);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const Quaternion r = random_quaternion(rng);
    const double scale = p.norm() * q.norm() * r.norm();
    EXPECT_LE(max_component_diff((p * q) * r, p * (q * r)), 8 * kEps * scale);
  }
}

TEST(QuaternionMul, DistributesOverAddition) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const Quaternion r = random_quaternion(rng);
    EXPECT_LE(max_component_diff(p * (q + r), p * q + p * r), 8 * kEps * p.norm() * (q.norm() + r.norm()));
  }
}

TEST(QuaternionConj, Examples) {
  EXPECT_EQ(qconj(Quaternion{1, 2, 3, 4}), (Quaternion{1, -2, -3, -4}));
  EXPECT_EQ(qconj(kI * kJ), -kK);
  EXPECT_EQ(qconj(kJ) * qconj(kI), -kK);
  EXPECT_EQ(qconj(Quaternion{5}), Quaternion{5});
}

TEST(QuaternionConj, InvolutionAndAntiAutomorphism) {
  Rng rng(5);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    EXPECT_EQ(qconj(qconj(p)), p);
    EXPECT_LE(max_component_diff(qconj(p * q), qconj(q) * qconj(p)), 4 * kEps * p.norm() * q.norm());
  }
}

TEST(QuaternionNorm, Examples) {
  EXPECT_DOUBLE_EQ(qnorm(Quaternion{1, 1, 1, 1}), 2.0);
  EXPECT_EQ(qnorm(Quaternion{}), 0.0);
  EXPECT_DOUBLE_EQ(qnorm(kI * kJ), 1.0);
}

TEST(QuaternionNorm, ProductWithConjugateIsRealNormSquared) {
  Rng rng(6);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion q = random_quaternion(rng);
    const Quaternion n2{q.norm2()};
    EXPECT_TRUE(near(q * qconj(q), n2, 4 * kEps * q.norm2()));
    EXPECT_TRUE(near(qconj(q) * q, n2, 4 * kEps * q.norm2()));
  }
}

TEST(QuaternionNorm, Multiplicative) {
  Rng rng(7);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const double expected = p.norm() * q.norm();
    EXPECT_LE(std::abs(qnorm(p * q) - expected), 1e-13 * expected);
  }
}

TEST(QuaternionInv, Examples) {
  EXPECT_EQ(qinv(kI), -kI);
  EXPECT_EQ(qinv(Quaternion{2}), Quaternion{0.5});
  EXPECT_TRUE(near(qinv(kOne + kI), Quaternion{0.5, -0.5}, 1e-16));
}

TEST(QuaternionInv, ZeroIsDomainError) { EXPECT_THROW(qinv(Quaternion{}), DomainError); }

TEST(QuaternionInv, TwoSidedInverse) {
  Rng rng(8);
  for (int t = 0; t < 10000; ++t) {
    const Quaternion q = random_quaternion(rng);
    EXPECT_LE(max_component_diff(q * qinv(q), kOne), 4 * kEps);
    EXPECT_LE(max_component_diff(qinv(q) * q, kOne), 4 * kEps);
  }
}

TEST(SphereOf, Examples) {
  EXPECT_EQ(sphere_of(kI), (SphereRep{0, 1}));
  EXPECT_EQ(sphere_of(Quaternion{3}), (SphereRep{3, 0}));
  const Quaternion h = kOne + kJ;
  const SphereRep s = sphere_of(h * kI * qinv(h));
  EXPECT_NEAR(s.a, 0.0, 1e-15);
  EXPECT_NEAR(s.b, 1.0, 1e-15);
}

TEST(SphereOf, ConstantOnSimilarityOrbits) {
  Rng rng(9);
  for (int t = 0; t < 1000; ++t) {
    const Quaternion l = random_quaternion(rng);
    const Quaternion h = random_quaternion(rng);
    const SphereRep a = sphere_of(l);
    const SphereRep b = sphere_of(h * l * qinv(h));
    EXPECT_NEAR(a.a, b.a, 1e-12 * std::max(1.0, l.norm()));
    EXPECT_NEAR(a.b, b.b, 1e-12 * std::max(1.0, l.norm()));
  }
}

TEST(SphereOf, RepresentativeHasNonnegativeImaginaryPart) {
  const SphereRep s = sphere_of(Quaternion{2, 0, -3, 4});
  EXPECT_EQ(s.representative(), (Quaternion{2, 5}));
  EXPECT_DOUBLE_EQ(s.radius(), std::hypot(2.0, 5.0));
}
