#pragma once

// Parametric test waveforms, the amplitude-invariant Clarke transform,
// sampling, and numerical differentiation / integration helpers.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "geofreq/geomalg.hpp"

namespace geofreq {

/// v = V (cos theta, sin theta, 0), theta = omega t + phase.
struct BalancedSignal {
  double amplitude = 1.0;
  double omega = 0.0;
  double phase = 0.0;
};

/// v = (V_alpha cos theta, V_beta sin theta, 0).
struct UnbalancedSignal {
  double amplitude_alpha = 1.0;
  double amplitude_beta = 1.0;
  double omega = 0.0;
  double phase = 0.0;
};

struct HarmonicTerm {
  int order = 0;
  double amplitude = 0.0;
  double phase = 0.0;
};

/// Balanced fundamental plus positive-sequence harmonics:
/// v = V (cos theta, sin theta, 0) + sum_h V_h (cos theta_h, sin theta_h, 0),
/// theta_h = h omega t + phase_h.
struct HarmonicSignal {
  double amplitude = 1.0;
  double omega = 0.0;
  double phase = 0.0;
  std::vector<HarmonicTerm> harmonics;
};

/// One-dimensional v = V_0 exp(rate t).
struct DcSignal {
  double initial = 1.0;
  double rate = 0.0;
};

using SignalSpec =
    std::variant<BalancedSignal, UnbalancedSignal, HarmonicSignal, DcSignal>;

/// Throws std::invalid_argument on a violated parameter constraint.
void validate(const SignalSpec& spec);

/// Number of vector components the family produces (3, or 1 for dc).
Eigen::Index dimension(const SignalSpec& spec);

/// Fundamental angular frequency; nullopt for dc.
std::optional<double> fundamental_omega(const SignalSpec& spec);

struct SampleGrid {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t count = 0;

  double time(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
  double duration() const { return dt * static_cast<double>(count); }
};

void validate(const SampleGrid& grid);

using Series = std::vector<VecN>;

struct SignalBundle {
  SampleGrid grid;
  Series v;
  Series v_prime;
  Series flux;
};

/// Closed-form point evaluation.
struct SignalPoint {
  VecN v;
  VecN v_prime;
  VecN flux;
};

SignalPoint evaluate(const SignalSpec& spec, double t);

SignalBundle synthesize(const SignalSpec& spec, const SampleGrid& grid);

/// Amplitude-invariant Clarke transform abc -> alpha beta gamma.
Vec3 clarke_forward(const Vec3& abc);
Vec3 clarke_inverse(const Vec3& alpha_beta_gamma);

/// Second-order finite differences (central inside, one-sided at the ends).
Series numeric_derivative(const Series& series, double dt);

/// Cumulative trapezoidal integral of `series`. With `detrend_period`, the
/// per-component mean over the trailing whole periods is subtracted.
Series flux_from_samples(const Series& series, const SampleGrid& grid,
                         std::optional<double> detrend_period = std::nullopt);

/// Parameter sets used by the CLI fixtures and the acceptance suite.
namespace fixtures {

BalancedSignal balanced(double f0 = 50.0);
/// V_beta / V_alpha = 1.2, phase = pi/6.
UnbalancedSignal unbalanced(double f0 = 50.0);
/// H = {7, 11}, V_h = V/(3h), phase_h = h phase, phase = pi/6.
HarmonicSignal harmonic(double f0 = 50.0);
/// V_0 = 1, rate = -0.5 1/s.
DcSignal dc(double rate = -0.5);

}  // namespace fixtures

}  // namespace geofreq
