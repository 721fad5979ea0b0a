#include "geofreq/geomalg.hpp"

#include <algorithm>
#include <string>

#include "geofreq/error.hpp"

namespace geofreq {

namespace {

void require_same_dim(const VecN& a, const VecN& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
  }
}

void require_dim3(Eigen::Index n, const char* op) {
  if (n != 3) {
    throw DimensionError(std::string(op) + ": requires n = 3, got " +
                         std::to_string(n));
  }
}

}  // namespace

Bivector::Bivector(Eigen::Index n) : matrix_(Tensor::Zero(n, n)) {}

Bivector Bivector::from_matrix(const Tensor& m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("bivector matrix must be square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (m.size() > 0 && (m + m.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw DimensionError("bivector matrix is not skew-symmetric");
  }
  return Bivector(Tensor(0.5 * (m - m.transpose())), Unchecked{});
}

Bivector Bivector::operator-() const { return {Tensor(-matrix_), Unchecked{}}; }

Bivector Bivector::operator+(const Bivector& other) const {
  if (dim() != other.dim()) throw DimensionError("bivector +: dimension mismatch");
  return {Tensor(matrix_ + other.matrix_), Unchecked{}};
}

Bivector Bivector::operator-(const Bivector& other) const {
  if (dim() != other.dim()) throw DimensionError("bivector -: dimension mismatch");
  return {Tensor(matrix_ - other.matrix_), Unchecked{}};
}

Bivector Bivector::operator*(double s) const {
  return {Tensor(matrix_ * s), Unchecked{}};
}

Bivector Bivector::operator/(double s) const {
  return {Tensor(matrix_ / s), Unchecked{}};
}

Bivector wedge(const VecN& a, const VecN& b) {
  require_same_dim(a, b, "wedge");
  Tensor m = a * b.transpose();
  m -= Tensor(m.transpose());
  return {std::move(m), Bivector::Unchecked{}};
}

Vec3 hodge3(const Bivector& b) {
  require_dim3(b.dim(), "hodge3");
  return {b(1, 2), b(2, 0), b(0, 1)};
}

Bivector embed3(const Vec3& w) {
  Tensor m(3, 3);
  // clang-format off
  m <<  0.0,   w.z(), -w.y(),
       -w.z(), 0.0,    w.x(),
        w.y(), -w.x(), 0.0;
  // clang-format on
  return Bivector::from_matrix(m, 0.0);
}

Vec3 cross3(const VecN& a, const VecN& b) {
  require_same_dim(a, b, "cross3");
  require_dim3(a.size(), "cross3");
  return Vec3(a(0), a(1), a(2)).cross(Vec3(b(0), b(1), b(2)));
}

VecN bivector_apply(const Bivector& b, const VecN& v) {
  if (b.dim() != v.size()) {
    throw DimensionError("bivector_apply: dimension mismatch");
  }
  return b.matrix() * v;
}

TensorSplit decompose_matrix(const Tensor& j) {
  if (j.rows() != j.cols()) {
    throw DimensionError("decompose_matrix: matrix must be square");
  }
  const auto n = j.rows();
  TensorSplit out;
  if (n == 0) {
    out.normal = out.shear = out.rotation = Tensor(0, 0);
    return out;
  }
  const Tensor sym = 0.5 * (j + j.transpose());
  out.rotation = 0.5 * (j - j.transpose());
  out.normal = Tensor::Identity(n, n) * (j.trace() / static_cast<double>(n));
  out.shear = sym - out.normal;
  return out;
}

}  // namespace geofreq
