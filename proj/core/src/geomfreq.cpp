#include "geofreq/geomfreq.hpp"

#include <cmath>

#include "geofreq/error.hpp"

namespace geofreq {

GeometricFrequency geometric_frequency(const VecN& v, const VecN& v_prime,
                                       double magnitude_floor) {
  if (v.size() != v_prime.size()) {
    throw DimensionError("geometric_frequency: v and v' differ in dimension");
  }
  const double mag2 = v.squaredNorm();
  const double mag = std::sqrt(mag2);
  if (!(mag > magnitude_floor) || mag2 == 0.0) {
    throw SingularMagnitudeError(mag, magnitude_floor);
  }
  GeometricFrequency gf;
  gf.rho = v.dot(v_prime) / mag2;
  gf.bivector = wedge(v, v_prime) / mag2;
  if (v.size() == 3) gf.omega = hodge3(gf.bivector);
  return gf;
}

VecN reconstruct_derivative(const GeometricFrequency& gf, const VecN& v) {
  if (gf.bivector.dim() != v.size()) {
    throw DimensionError("reconstruct_derivative: dimension mismatch");
  }
  return gf.rho * v - bivector_apply(gf.bivector, v);
}

namespace {

std::vector<FrequencySample> series_from(const Series& v, const Series& vp,
                                         const SampleGrid& grid) {
  std::vector<FrequencySample> out;
  out.reserve(v.size());
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag2 = v[i].squaredNorm();
    sum_sq += mag2;
    const double running_rms = std::sqrt(sum_sq / static_cast<double>(i + 1));
    FrequencySample s;
    s.t = grid.time(i);
    try {
      s.value = geometric_frequency(v[i], vp[i], kMagnitudeGuard * running_rms);
    } catch (const SingularMagnitudeError&) {
      s.status = SampleStatus::singular_magnitude;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<FrequencySample> geometric_frequency_series(
    const SignalBundle& bundle, DerivativeSource source) {
  validate(bundle.grid);
  if (bundle.v.size() != bundle.grid.count) {
    throw DimensionError("geometric_frequency_series: v length != grid count");
  }
  if (source == DerivativeSource::numeric) {
    return series_from(bundle.v, numeric_derivative(bundle.v, bundle.grid.dt),
                       bundle.grid);
  }
  if (bundle.v_prime.size() != bundle.v.size()) {
    throw DimensionError("geometric_frequency_series: v' length != v length");
  }
  return series_from(bundle.v, bundle.v_prime, bundle.grid);
}

std::vector<FrequencySample> geometric_frequency_series(const Series& v,
                                                        const SampleGrid& grid) {
  validate(grid);
  if (v.size() != grid.count) {
    throw DimensionError("geometric_frequency_series: v length != grid count");
  }
  return series_from(v, numeric_derivative(v, grid.dt), grid);
}

}  // namespace geofreq
