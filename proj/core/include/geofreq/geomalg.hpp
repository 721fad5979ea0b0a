#pragma once

// Minimal exterior-algebra kernel on R^n.
//
// Bivectors are stored as skew-symmetric matrices with the convention
//   wedge(a, b)[i][j] = a_i b_j - a_j b_i
// and act on vectors by the ordinary matrix-vector product. With this choice
// hodge3(wedge(a, b)) == cross3(a, b), and for any bivector B in three
// dimensions B * x == -hodge3(B) x x.

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace geofreq {

using VecN = Eigen::VectorXd;
using Vec3 = Eigen::Vector3d;
using Tensor = Eigen::MatrixXd;

class Bivector {
 public:
  /// Null bivector of order n.
  explicit Bivector(Eigen::Index n = 0);

  /// Wraps `m`; throws DimensionError unless square and skew to `tol`
  /// relative to the largest entry. The stored matrix is the exact skew
  /// part of `m`.
  static Bivector from_matrix(const Tensor& m, double tol = 1e-12);

  Eigen::Index dim() const { return matrix_.rows(); }
  const Tensor& matrix() const { return matrix_; }
  double operator()(Eigen::Index i, Eigen::Index j) const {
    return matrix_(i, j);
  }

  /// Frobenius norm of the matrix representation.
  double norm() const { return matrix_.norm(); }
  bool is_zero() const { return matrix_.isZero(0.0); }

  Bivector operator-() const;
  Bivector operator+(const Bivector& other) const;
  Bivector operator-(const Bivector& other) const;
  Bivector operator*(double s) const;
  Bivector operator/(double s) const;

 private:
  struct Unchecked {};
  Bivector(Tensor m, Unchecked) : matrix_(std::move(m)) {}

  Tensor matrix_;

  friend Bivector wedge(const VecN& a, const VecN& b);
};

inline Bivector operator*(double s, const Bivector& b) { return b * s; }

/// Scalar + bivector pair, e.g. the geometric frequency rho + W.
struct Multivector {
  double scalar = 0.0;
  Bivector bivector;

  Multivector conjugate() const { return {scalar, -bivector}; }
};

Bivector wedge(const VecN& a, const VecN& b);

/// Three-dimensional dual: (B[1][2], B[2][0], B[0][1]).
Vec3 hodge3(const Bivector& b);

/// Inverse of hodge3.
Bivector embed3(const Vec3& w);

Vec3 cross3(const VecN& a, const VecN& b);

/// B * v.
VecN bivector_apply(const Bivector& b, const VecN& v);

/// Isotropic / traceless-symmetric / skew split of a square matrix:
///   normal = tr(J)/n * I, shear = (J + J^T)/2 - normal, rotation = (J - J^T)/2.
struct TensorSplit {
  Tensor normal;
  Tensor shear;
  Tensor rotation;
};

TensorSplit decompose_matrix(const Tensor& j);

}  // namespace geofreq
