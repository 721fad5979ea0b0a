#pragma once

// Operating-condition labels. The exact path reads the field decomposition
// directly: unbalance shows up only in the shear terms (rho_r, omega_r),
// harmonics only in the local time-variation terms (rho_t, omega_t). The
// sampled path has only rho_v and omega_v and separates the two by the
// spectrum of the rho_v ripple: unbalance ripples at twice the fundamental,
// a harmonic of order h at (h - 1) times it.

#include <optional>
#include <span>
#include <string_view>

#include "geofreq/geomfreq.hpp"
#include "geofreq/lagrange.hpp"

namespace geofreq {

enum class ConditionLabel {
  dc,
  balanced_sinusoidal,
  unbalanced_sinusoidal,
  balanced_nonsinusoidal,
  mixed_or_unknown,
};

/// Upper-case token, e.g. "UNBALANCED_SINUSOIDAL".
std::string_view to_string(ConditionLabel label);

/// 1e-3 * omega.
double default_tolerance(double omega);

/// Minimum samples for any classification.
inline constexpr std::size_t kMinSamples = 10;

/// Throws std::invalid_argument when the series is shorter than kMinSamples
/// or, if `omega` is given, shorter than one fundamental period.
ConditionLabel classify_components(const ComponentSeries& series, double tol,
                                   std::optional<double> omega = std::nullopt);

struct FeatureVector {
  double rms_rho_r = 0.0;
  double rms_rho_t = 0.0;
  double rms_omega_r = 0.0;
  double rms_omega_t = 0.0;
  double mean_omega_v = 0.0;
  /// Zero-crossing frequency of the rho_v ripple over mean |omega_v|.
  double dominant_ripple_ratio = 0.0;
  double mean_rho_v = 0.0;
  /// Share of the rho_v ripple power sitting at exactly 2 omega_est.
  double double_frequency_share = 0.0;
  std::size_t periods = 0;
};

/// Ripple below this ratio is attributed to unbalance (expected 2),
/// above it to harmonics (expected h - 1 >= 4).
inline constexpr double kUnbalanceRippleRatio = 3.0;
/// double_frequency_share thresholds that make a signature "pure".
inline constexpr double kPureUnbalanceShare = 0.8;
inline constexpr double kPureHarmonicShare = 0.05;

/// Statistics over the trailing whole periods of 2 pi / omega_est. Singular
/// samples are skipped. Throws std::invalid_argument with fewer than two
/// periods of usable data.
FeatureVector features_from_samples(std::span<const FrequencySample> series,
                                    double omega_est);

ConditionLabel classify_features(const FeatureVector& features, double tol);

ConditionLabel classify_samples(std::span<const FrequencySample> series,
                                double omega_est, double tol);

}  // namespace geofreq
