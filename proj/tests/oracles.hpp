#pragma once

// Test-only reference computations. Everything here is written from the
// closed forms directly, without going through the library's field or
// geometric-frequency code paths.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>
#include <Eigen/QR>

namespace geofreq::oracle {

inline Eigen::MatrixXd wedge_loops(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  const auto n = a.size();
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(i) * b(j) - a(j) * b(i);
  }
  return m;
}

inline Eigen::Vector3d cross_components(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
          a(0) * b(1) - a(1) * b(0)};
}

// Unbalanced v = (Va cos th, Vb sin th, 0).
struct UnbalancedClosedForm {
  double va, vb, omega;

  double mag2(double th) const {
    return va * va * std::cos(th) * std::cos(th) + vb * vb * std::sin(th) * std::sin(th);
  }
  double kappa() const { return 0.5 * (vb / va - va / vb); }
  double xi() const { return 0.5 * (va / vb + vb / va); }
  double rho_v(double th) const {
    return 0.5 * omega * (vb * vb - va * va) * std::sin(2.0 * th) / mag2(th);
  }
  double omega_v(double th) const { return omega * va * vb / mag2(th); }
  // sin(2 theta); the printed sin^2 is a typo.
  double rho_r(double th) const {
    return kappa() * omega * va * vb * std::sin(2.0 * th) / mag2(th);
  }
  double omega_r(double th) const {
    const double c = std::cos(th), s = std::sin(th);
    return kappa() * omega * (va * va * c * c - vb * vb * s * s) / mag2(th);
  }
  double omega_r_alt(double th) const {
    const double c = std::cos(th), s = std::sin(th);
    return 0.5 * omega *
           (va * vb / mag2(th) - va * va * va / vb * c * c / mag2(th) -
            vb * vb * vb / va * s * s / mag2(th));
  }
};

// Balanced fundamental plus harmonics, closed forms for the fundamental-frame
// local time-variation terms. Signs follow the voltage-reproducing field.
struct Harmonic {
  int h;
  double amp;
  double phase;
};

struct HarmonicClosedForm {
  double v, omega, phase;
  std::vector<Harmonic> hs;

  double theta(double t) const { return omega * t + phase; }
  double theta_h(const Harmonic& x, double t) const { return x.h * omega * t + x.phase; }

  double mag2(double t) const {
    double a = v * std::cos(theta(t)), b = v * std::sin(theta(t));
    for (const auto& x : hs) {
      a += x.amp * std::cos(theta_h(x, t));
      b += x.amp * std::sin(theta_h(x, t));
    }
    return a * a + b * b;
  }

  // Single-harmonic forms with the denominator V^2 + V_h^2 + 2 V V_h cos.
  double rho_single(double t) const {
    const auto& x = hs.front();
    const double d = theta_h(x, t) - theta(t);
    return -omega * v * (x.h - 1) * x.amp * std::sin(d) /
           (v * v + x.amp * x.amp + 2.0 * v * x.amp * std::cos(d));
  }
  double omega_single(double t) const {
    const auto& x = hs.front();
    const double d = theta_h(x, t) - theta(t);
    return omega * (x.h - 1) * x.amp * (v * std::cos(d) + x.amp) /
           (v * v + x.amp * x.amp + 2.0 * v * x.amp * std::cos(d));
  }

  // Multi-harmonic sums including the harmonic-harmonic cross terms.
  double rho_t(double t) const {
    double num = 0.0;
    for (const auto& x : hs) {
      num += -(x.h - 1) * v * x.amp * std::sin(theta_h(x, t) - theta(t));
      for (const auto& g : hs) {
        if (g.h == x.h) continue;
        num += (x.h - 1) * g.amp * x.amp * std::sin(theta_h(g, t) - theta_h(x, t));
      }
    }
    return omega * num / mag2(t);
  }
  double omega_t(double t) const {
    double num = 0.0;
    for (const auto& x : hs) {
      num += (x.h - 1) * x.amp * (v * std::cos(theta_h(x, t) - theta(t)) + x.amp);
      for (const auto& g : hs) {
        if (g.h == x.h) continue;
        num += (x.h - 1) * g.amp * x.amp * std::cos(theta_h(g, t) - theta_h(x, t));
      }
    }
    return omega * num / mag2(t);
  }
};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  Eigen::VectorXd vec(Eigen::Index n, double scale = 10.0) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = uniform(-scale, scale);
    return v;
  }

  Eigen::MatrixXd mat(Eigen::Index n, double scale = 10.0) {
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = uniform(-scale, scale);
    }
    return m;
  }

  // Random orthogonal matrix from a QR of a Gaussian matrix.
  Eigen::Matrix3d orthogonal() {
    std::normal_distribution<double> n01;
    Eigen::Matrix3d g;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g(i, j) = n01(gen_);
    }
    Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
    return qr.householderQ();
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace geofreq::oracle
