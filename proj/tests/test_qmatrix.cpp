#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qframe/errors.hpp"
#include "qframe/qmatrix.hpp"

using namespace qframe;
using fixtures::e;
using fixtures::near;

TEST(QVector, ZeroDimensionRejected) { EXPECT_THROW(QVector(0), ShapeError); }

TEST(QVector, RightScalarActionMultipliesOnTheRight) {
  const QVector v{kI, kJ};
  const QVector w = v * kJ;
  EXPECT_EQ(w[0], kI * kJ);
  EXPECT_EQ(w[1], kJ * kJ);
  EXPECT_NE(w[0], kJ * kI);
}

TEST(Inner, Examples) {
  EXPECT_EQ(inner(e(2, 0), e(2, 0)), kOne);
  EXPECT_EQ(inner(e(2, 0) * kJ, e(2, 0) * kK), -kI);
  EXPECT_EQ(inner(e(2, 0), e(2, 1)), Quaternion{});
}

TEST(Inner, DimensionMismatchIsShapeError) {
  EXPECT_THROW(inner(QVector(2), QVector(3)), ShapeError);
}

TEST(Inner, SesquilinearAndConjugateSymmetric) {
  Rng rng(11);
  for (int t = 0; t < 1000; ++t) {
    const QVector phi = random_vector(4, rng);
    const QVector psi = random_vector(4, rng);
    const Quaternion q = random_quaternion(rng);
    const double s = phi.norm() * psi.norm() * std::max(1.0, q.norm());
    EXPECT_TRUE(near(inner(phi, psi * q), inner(phi, psi) * q, 1e-13 * s));
    EXPECT_TRUE(near(inner(phi * q, psi), qconj(q) * inner(phi, psi), 1e-13 * s));
    EXPECT_TRUE(near(qconj(inner(phi, psi)), inner(psi, phi), 1e-13 * s));
    const Quaternion n = inner(phi, phi);
    EXPECT_LE(n.imag().norm(), 1e-15 * n.w);
    EXPECT_NEAR(n.w, phi.norm2(), 1e-14 * n.w);
    EXPECT_GT(n.w, 0.0);
  }
}

TEST(Matmul, Examples) {
  Rng rng(12);
  const QMatrix a = random_matrix(3, 3, rng);
  EXPECT_EQ(a * QMatrix::identity(3), a);
  EXPECT_EQ(QMatrix{{kI}} * QMatrix{{kJ}}, QMatrix{{kK}});
  const QMatrix swap{{0, 1}, {1, 0}};
  EXPECT_EQ(swap * e(2, 0), e(2, 1));
}

TEST(Matmul, ShapeMismatch) {
  EXPECT_THROW(matmul(QMatrix(2, 3), QMatrix(2, 3)), ShapeError);
  EXPECT_THROW(QMatrix(2, 3) * QVector(2), ShapeError);
  EXPECT_THROW(QMatrix(0, 3), ShapeError);
}

TEST(Matmul, ProductOrderIsPreserved) {
  const QMatrix a{{kI, kOne}};
  const QMatrix b{{kJ}, {kK}};
  EXPECT_EQ((a * b)(0, 0), kI * kJ + kK);
}

TEST(Matmul, RightLinear) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const QMatrix a = random_matrix(3, 3, rng);
    const QVector phi = random_vector(3, rng);
    const QVector psi = random_vector(3, rng);
    const Quaternion p = random_quaternion(rng);
    const Quaternion q = random_quaternion(rng);
    const QVector lhs = a * (phi * q + psi * p);
    const QVector rhs = (a * phi) * q + (a * psi) * p;
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12 * (1 + lhs.max_abs()));
  }
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(QMatrix{{kI}}), QMatrix{{-kI}});
  EXPECT_EQ(adjoint(QMatrix::identity(3)), QMatrix::identity(3));
  const QMatrix a{{0, kJ}, {0, 0}};
  const QMatrix expected{{0, 0}, {-kJ, 0}};
  EXPECT_EQ(adjoint(a), expected);
}

TEST(Adjoint, InvolutionAndDefiningIdentity) {
  Rng rng(14);
  for (int t = 0; t < 1000; ++t) {
    const QMatrix a = random_matrix(3, 3, rng);
    EXPECT_EQ(adjoint(adjoint(a)), a);
    const QVector phi = random_vector(3, rng);
    const QVector psi = random_vector(3, rng);
    EXPECT_TRUE(near(inner(psi, a * phi), inner(adjoint(a) * psi, phi), 1e-11));
  }
}

TEST(Outer, EntriesAreLeftTimesConjugateRight) {
  const QVector u{kI, kOne};
  const QVector v{kJ, kK};
  const QMatrix o = outer(u, v);
  EXPECT_EQ(o(0, 0), kI * qconj(kJ));
  EXPECT_EQ(o(1, 1), qconj(kK));
  Rng rng(15);
  const QVector x = random_vector(2, rng);
  // |u><v| x = u <v|x>
  EXPECT_LE(max_abs_diff(o * x, u * inner(v, x)), 1e-14);
}

TEST(QMatrix, FromColumnsAndDiagonal) {
  const QMatrix h = QMatrix::from_columns(std::vector<QVector>{e(2, 1), e(2, 0)});
  EXPECT_EQ(h, (QMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(QMatrix::diagonal({kI, kJ})(1, 1), kJ);
  EXPECT_EQ(h.column(0), e(2, 1));
}
