#pragma once

// Velocity-field view of a signal. The voltage v is treated as a velocity
// field over flux coordinates phi, v = v(t, phi), whose stream-lines satisfy
// phi' = v(t, phi). Along a stream-line the total derivative is
//
//   v' = d_t v + J v,   J[i][j] = dv_i / dphi_j
//
// and J splits into normal strain S, shear strain R and rotation Q.

#include <functional>
#include <vector>

#include "geofreq/geomalg.hpp"
#include "geofreq/signal.hpp"

namespace geofreq {

class VelocityField {
 public:
  using VectorFn = std::function<VecN(double t, const VecN& phi)>;
  using TensorFn = std::function<Tensor(double t, const VecN& phi)>;

  VelocityField(Eigen::Index dim, VectorFn eval, VectorFn partial_t,
                TensorFn jacobian);

  Eigen::Index dim() const { return dim_; }

  VecN eval(double t, const VecN& phi) const;
  /// Partial time derivative at fixed phi.
  VecN partial_t(double t, const VecN& phi) const;
  Tensor jacobian(double t, const VecN& phi) const;

 private:
  void check(const VecN& phi) const;

  Eigen::Index dim_;
  VectorFn eval_;
  VectorFn partial_t_;
  TensorFn jacobian_;
};

/// Reference frame used to write the harmonic family as a field. The
/// fundamental frame (order 1) rotates at omega; order h rotates at h omega.
struct Frame {
  int order = 1;

  static Frame fundamental() { return {1}; }
  static Frame harmonic(int h) { return {h}; }
};

/// Closed-form field for a signal family. Throws std::invalid_argument for
/// an unsupported frame (non-fundamental frame on a non-harmonic spec, or an
/// order not present in the spec) and for degenerate unbalanced amplitudes.
VelocityField make_field(const SignalSpec& spec, Frame frame = Frame::fundamental());

struct FieldDecomposition {
  Tensor normal;    // S
  Tensor shear;     // R
  Tensor rotation;  // Q
  double divergence = 0.0;
  /// curl of v with respect to phi; zero unless n = 3.
  Vec3 vorticity = Vec3::Zero();
};

FieldDecomposition decompose(const VelocityField& field, double t, const VecN& phi);

/// d_t v + S v + R v + Q v.
VecN lagrange_derivative(const VelocityField& field, double t, const VecN& phi);

/// Split of the geometric frequency into local time-variation (t), normal
/// strain (s), shear strain (r) and rigid rotation (half vorticity).
/// Vector terms are zero unless n = 3.
struct FrequencyComponents {
  double rho_t = 0.0;
  double rho_s = 0.0;
  double rho_r = 0.0;
  Vec3 omega_t = Vec3::Zero();
  Vec3 omega_r = Vec3::Zero();
  Vec3 half_w = Vec3::Zero();
  double rho_v = 0.0;
  Vec3 omega_v = Vec3::Zero();
};

/// The summed omega_v equals the geometric frequency of (v, v') only when
/// the vorticity is perpendicular to v, which holds for every in-plane
/// family built by make_field.
FrequencyComponents frequency_components(const VelocityField& field, double t,
                                         const VecN& phi,
                                         double magnitude_floor = 0.0);

/// Frequency components along the closed-form stream-line of `spec`.
struct ComponentSeries {
  SampleGrid grid;
  std::vector<FrequencyComponents> values;
};

ComponentSeries component_series(const SignalSpec& spec, const SampleGrid& grid,
                                 Frame frame = Frame::fundamental());

/// |v ^ d_t v|_F / |v|^2. Zero iff the stream-lines are material curves.
double helmholtz_residual(const VelocityField& field, double t, const VecN& phi,
                          double magnitude_floor = 0.0);

/// Central-difference Jacobian.
Tensor fd_jacobian(const VelocityField& field, double t, const VecN& phi,
                   double step);

/// Classic RK4 on phi' = v(t, phi), one step per grid interval. The first
/// entry is phi0. Throws std::runtime_error if the state stops being finite.
Series integrate_streamline(const VelocityField& field, const VecN& phi0,
                            const SampleGrid& grid);

struct UnbalanceFactors {
  double kappa = 0.0;  // shear factor
  double xi = 1.0;     // rotation factor
};

UnbalanceFactors unbalance_factors(const UnbalancedSignal& signal);

/// Contribution of a single harmonic to rho_t and omega_t (z component) in
/// the fundamental frame. Contributions share the full |v|^2 denominator and
/// sum exactly to rho_t and omega_t.
struct HarmonicDistortion {
  int order = 0;
  double rho = 0.0;
  double omega = 0.0;
};

std::vector<HarmonicDistortion> harmonic_distortion(const HarmonicSignal& signal,
                                                    double t);

}  // namespace geofreq
