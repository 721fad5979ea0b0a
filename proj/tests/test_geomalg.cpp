#include <gtest/gtest.h>

#include <numbers>

#include "geofreq/error.hpp"
#include "geofreq/geomalg.hpp"
#include "oracles.hpp"

namespace geofreq {
namespace {

VecN v3(double a, double b, double c) { return Vec3(a, b, c); }

TEST(Wedge, UnitBasis) {
  const auto b = wedge(v3(1, 0, 0), v3(0, 1, 0));
  EXPECT_DOUBLE_EQ(b(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(b(1, 0), -1.0);
  EXPECT_DOUBLE_EQ(b.matrix().cwiseAbs().sum(), 2.0);
}

TEST(Wedge, SelfIsNull) {
  EXPECT_TRUE(wedge(v3(1.5, -2, 7), v3(1.5, -2, 7)).is_zero());
}

TEST(Wedge, HandEvaluatedEntries) {
  const auto b = wedge(v3(1, 2, 3), v3(4, 5, 6));
  EXPECT_DOUBLE_EQ(b(0, 1), -3.0);
  EXPECT_DOUBLE_EQ(b(0, 2), -6.0);
  EXPECT_DOUBLE_EQ(b(1, 2), -3.0);
  EXPECT_TRUE((b.matrix() - oracle::wedge_loops(v3(1, 2, 3), v3(4, 5, 6))).isZero(0.0));
}

TEST(Wedge, DimensionMismatchThrows) {
  EXPECT_THROW(wedge(VecN::Ones(2), VecN::Ones(3)), DimensionError);
}

TEST(Hodge3, BasisAndZero) {
  EXPECT_EQ(hodge3(wedge(v3(1, 0, 0), v3(0, 1, 0))), Vec3(0, 0, 1));
  EXPECT_EQ(hodge3(Bivector(3)), Vec3::Zero());
}

TEST(Hodge3, RejectsOtherDimensions) {
  EXPECT_THROW(hodge3(Bivector(2)), DimensionError);
  EXPECT_THROW(hodge3(wedge(VecN::Ones(4), VecN::Zero(4))), DimensionError);
}

TEST(Hodge3, EmbedIsInverse) {
  const Vec3 w(0.3, -1.25, 4.0);
  EXPECT_TRUE(hodge3(embed3(w)).isApprox(w));
}

TEST(Hodge3, BalancedRotationTensorGivesVorticity) {
  const double w = 2.0 * std::numbers::pi * 50.0;
  Tensor q = Tensor::Zero(3, 3);
  q(0, 1) = -w;
  q(1, 0) = w;
  // The curl reads the transpose under the a_i b_j - a_j b_i convention.
  const Vec3 vort = hodge3(Bivector::from_matrix(2.0 * q.transpose()));
  EXPECT_NEAR(vort.z(), 2.0 * w, 1e-12 * w);
  EXPECT_EQ(vort.x(), 0.0);
  EXPECT_EQ(vort.y(), 0.0);
}

TEST(BivectorApply, BasisCase) {
  const VecN r = bivector_apply(wedge(v3(1, 0, 0), v3(0, 1, 0)), v3(1, 0, 0));
  EXPECT_EQ(r, v3(0, -1, 0));
}

TEST(BivectorApply, OrthogonalToGeneratingVector) {
  const VecN v = v3(1, 2, 3);
  const VecN r = bivector_apply(wedge(v, v3(0, 1, 0)), v);
  EXPECT_NEAR(r.dot(v), 0.0, 1e-12);
}

TEST(BivectorApply, BalancedRotationTensor) {
  const double w = 100.0 * std::numbers::pi;
  const double amplitude = 2.5;
  Tensor q = Tensor::Zero(3, 3);
  q(0, 1) = -w;
  q(1, 0) = w;
  const VecN r = bivector_apply(Bivector::from_matrix(q), v3(amplitude, 0, 0));
  EXPECT_NEAR(r(0), 0.0, 1e-12);
  EXPECT_NEAR(r(1), w * amplitude, 1e-12 * w);
  EXPECT_NEAR(r(2), 0.0, 1e-12);
}

TEST(BivectorApply, DimensionMismatchThrows) {
  EXPECT_THROW(bivector_apply(Bivector(3), VecN::Ones(2)), DimensionError);
}

TEST(Bivector, FromMatrixRejectsNonSkew) {
  Tensor m = Tensor::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(Bivector::from_matrix(m), DimensionError);
  EXPECT_THROW(Bivector::from_matrix(Tensor::Zero(2, 3)), DimensionError);
}

TEST(Multivector, ConjugateFlipsBivector) {
  const Multivector m{2.0, wedge(v3(1, 0, 0), v3(0, 1, 0))};
  const auto c = m.conjugate();
  EXPECT_EQ(c.scalar, 2.0);
  EXPECT_TRUE((c.bivector + m.bivector).is_zero());
}

TEST(DecomposeMatrix, SkewInputIsPureRotation) {
  const double w = 314.0;
  Tensor j = Tensor::Zero(3, 3);
  j(0, 1) = -w;
  j(1, 0) = w;
  const auto s = decompose_matrix(j);
  EXPECT_TRUE(s.normal.isZero(0.0));
  EXPECT_TRUE(s.shear.isZero(0.0));
  EXPECT_EQ(s.rotation, j);
}

TEST(DecomposeMatrix, SymmetricTracelessIsPureShear) {
  Tensor j(3, 3);
  j << 1, 2, 3, 2, -4, 5, 3, 5, 3;
  const auto s = decompose_matrix(j);
  EXPECT_TRUE(s.normal.isZero(0.0));
  EXPECT_TRUE(s.rotation.isZero(0.0));
  EXPECT_TRUE(s.shear.isApprox(j));
}

TEST(DecomposeMatrix, EqualDiagonalIsPureNormal) {
  const Tensor j = 3.0 * Tensor::Identity(3, 3);
  const auto s = decompose_matrix(j);
  EXPECT_EQ(s.normal, j);
  EXPECT_TRUE(s.shear.isZero(0.0));
  EXPECT_TRUE(s.rotation.isZero(0.0));
}

TEST(DecomposeMatrix, GeneralSplitInvariants) {
  oracle::Rng rng(7);
  for (Eigen::Index n : {1, 2, 3, 5}) {
    const Tensor j = rng.mat(n);
    const auto s = decompose_matrix(j);
    EXPECT_TRUE((s.normal + s.shear + s.rotation).isApprox(j, 1e-14));
    EXPECT_NEAR(s.shear.trace(), 0.0, 1e-12);
    EXPECT_TRUE(s.shear.isApprox(s.shear.transpose()));
    EXPECT_TRUE((s.rotation + s.rotation.transpose()).isZero(0.0));
    EXPECT_TRUE(s.normal.isDiagonal());
  }
}

TEST(DecomposeMatrix, NonSquareThrows) {
  EXPECT_THROW(decompose_matrix(Tensor::Zero(2, 3)), DimensionError);
}

}  // namespace
}  // namespace geofreq
