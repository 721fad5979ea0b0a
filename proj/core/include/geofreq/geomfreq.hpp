#pragma once

// Geometric frequency of a time-dependent vector v(t):
//
//   rho = (v . v') / |v|^2        radial frequency
//   W   = (v ^ v') / |v|^2        bivector part
//   omega = hodge3(W) = v x v' / |v|^2  (n = 3 only)
//
// so that v' = rho v - W v, which in three dimensions reads
// v' = rho v + omega x v.

#include <optional>
#include <vector>

#include "geofreq/geomalg.hpp"
#include "geofreq/signal.hpp"

namespace geofreq {

struct GeometricFrequency {
  double rho = 0.0;
  Bivector bivector;
  std::optional<Vec3> omega;

  Multivector multivector() const { return {rho, bivector}; }
};

/// Relative threshold used by the series guard: a sample is singular when
/// |v| <= kMagnitudeGuard * (running RMS of |v|).
inline constexpr double kMagnitudeGuard = 1e-9;

/// Throws SingularMagnitudeError when |v| <= magnitude_floor (or |v| == 0),
/// DimensionError on mismatched lengths.
GeometricFrequency geometric_frequency(const VecN& v, const VecN& v_prime,
                                       double magnitude_floor = 0.0);

/// rho v - W v.
VecN reconstruct_derivative(const GeometricFrequency& gf, const VecN& v);

enum class SampleStatus { ok, singular_magnitude };

struct FrequencySample {
  double t = 0.0;
  SampleStatus status = SampleStatus::ok;
  /// Empty when status != ok.
  std::optional<GeometricFrequency> value;
};

enum class DerivativeSource { analytic, numeric };

std::vector<FrequencySample> geometric_frequency_series(
    const SignalBundle& bundle, DerivativeSource source);

/// Same as above for a raw sampled series; v' is taken by numeric_derivative.
std::vector<FrequencySample> geometric_frequency_series(const Series& v,
                                                        const SampleGrid& grid);

}  // namespace geofreq
