#include "geofreq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace geofreq {

std::string_view to_string(ConditionLabel label) {
  switch (label) {
    case ConditionLabel::dc:
      return "DC";
    case ConditionLabel::balanced_sinusoidal:
      return "BALANCED_SINUSOIDAL";
    case ConditionLabel::unbalanced_sinusoidal:
      return "UNBALANCED_SINUSOIDAL";
    case ConditionLabel::balanced_nonsinusoidal:
      return "BALANCED_NONSINUSOIDAL";
    case ConditionLabel::mixed_or_unknown:
      return "MIXED_OR_UNKNOWN";
  }
  return "MIXED_OR_UNKNOWN";
}

double default_tolerance(double omega) { return 1e-3 * omega; }

namespace {

struct Rms {
  double sum = 0.0;
  std::size_t n = 0;
  void add(double x) {
    sum += x * x;
    ++n;
  }
  double value() const { return n == 0 ? 0.0 : std::sqrt(sum / static_cast<double>(n)); }
};

}  // namespace

ConditionLabel classify_components(const ComponentSeries& series, double tol,
                                   std::optional<double> omega) {
  const auto& values = series.values;
  if (values.size() < kMinSamples) {
    throw std::invalid_argument("classify_components: need at least " +
                                std::to_string(kMinSamples) + " samples");
  }
  if (omega) {
    const double period = 2.0 * std::numbers::pi / *omega;
    const double covered = series.grid.dt * static_cast<double>(values.size());
    if (covered < period * (1.0 - 1e-9)) {
      throw std::invalid_argument(
          "classify_components: series shorter than one fundamental period");
    }
  }

  Rms rho_t, rho_r, omega_t, omega_r, half_w, omega_v;
  for (const auto& c : values) {
    rho_t.add(c.rho_t);
    rho_r.add(c.rho_r);
    omega_t.add(c.omega_t.norm());
    omega_r.add(c.omega_r.norm());
    half_w.add(c.half_w.norm());
    omega_v.add(c.omega_v.norm());
  }
  auto small = [tol](const Rms& r) { return r.value() <= tol; };

  if (small(omega_t) && small(omega_r) && small(half_w) && small(omega_v)) {
    return ConditionLabel::dc;
  }
  const bool shear = !small(rho_r) && !small(omega_r);
  const bool no_shear = small(rho_r) && small(omega_r);
  const bool local = !small(rho_t) && !small(omega_t);
  const bool no_local = small(rho_t) && small(omega_t);
  if (no_shear && no_local) return ConditionLabel::balanced_sinusoidal;
  if (shear && no_local) return ConditionLabel::unbalanced_sinusoidal;
  if (local && no_shear) return ConditionLabel::balanced_nonsinusoidal;
  return ConditionLabel::mixed_or_unknown;
}

FeatureVector features_from_samples(std::span<const FrequencySample> series,
                                    double omega_est) {
  if (!(omega_est > 0.0)) {
    throw std::invalid_argument("features_from_samples: omega_est must be > 0");
  }
  std::vector<const FrequencySample*> ok;
  ok.reserve(series.size());
  for (const auto& s : series) {
    if (s.status == SampleStatus::ok && s.value) ok.push_back(&s);
  }
  if (ok.size() < kMinSamples) {
    throw std::invalid_argument("features_from_samples: too few usable samples");
  }
  const double dt =
      (ok.back()->t - ok.front()->t) / static_cast<double>(ok.size() - 1);
  if (!(dt > 0.0)) {
    throw std::invalid_argument("features_from_samples: non-increasing time axis");
  }
  const double period = 2.0 * std::numbers::pi / omega_est;
  const auto per = static_cast<std::size_t>(std::llround(period / dt));
  if (per < 4 || ok.size() / per < 2) {
    throw std::invalid_argument(
        "features_from_samples: need at least two periods of data");
  }
  const std::size_t periods = ok.size() / per;
  const std::size_t n = periods * per;
  const auto window = std::span(ok).last(n);

  std::vector<double> rho(n), mag(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& gf = *window[i]->value;
    rho[i] = gf.rho;
    mag[i] = gf.omega ? gf.omega->norm() : 0.0;
  }
  auto mean = [](const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
  };

  FeatureVector f;
  f.periods = periods;
  f.mean_rho_v = mean(rho);
  f.mean_omega_v = mean(mag);

  Rms rho_ripple, omega_ripple;
  double c2 = 0.0;
  double s2 = 0.0;
  std::size_t crossings = 0;
  int last_sign = 0;
  double first_cross = 0.0, last_cross = 0.0;
  const double t0 = window.front()->t;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rho[i] - f.mean_rho_v;
    rho_ripple.add(x);
    omega_ripple.add(mag[i] - f.mean_omega_v);
    const double a = 2.0 * omega_est * (window[i]->t - t0);
    c2 += x * std::cos(a);
    s2 += x * std::sin(a);
    const int sign = (x > 0.0) - (x < 0.0);
    if (sign != 0) {
      if (last_sign != 0 && sign != last_sign) {
        last_cross = window[i]->t;
        if (crossings++ == 0) first_cross = last_cross;
      }
      last_sign = sign;
    }
  }

  const double ripple_power = rho_ripple.value() * rho_ripple.value();
  if (ripple_power > 0.0) {
    const double a = 2.0 * c2 / static_cast<double>(n);
    const double b = 2.0 * s2 / static_cast<double>(n);
    f.double_frequency_share = std::min(1.0, 0.5 * (a * a + b * b) / ripple_power);
  }
  // Half a ripple cycle between consecutive crossings.
  double ripple_omega = 0.0;
  if (crossings >= 2 && last_cross > first_cross) {
    ripple_omega = std::numbers::pi * static_cast<double>(crossings - 1) /
                   (last_cross - first_cross);
  }
  f.dominant_ripple_ratio =
      f.mean_omega_v > 0.0 ? ripple_omega / f.mean_omega_v : 0.0;

  if (f.dominant_ripple_ratio < kUnbalanceRippleRatio) {
    f.rms_rho_r = rho_ripple.value();
    f.rms_omega_r = omega_ripple.value();
  } else {
    f.rms_rho_t = rho_ripple.value();
    f.rms_omega_t = omega_ripple.value();
  }
  return f;
}

ConditionLabel classify_features(const FeatureVector& f, double tol) {
  if (f.mean_omega_v <= tol) return ConditionLabel::dc;
  const bool shear = f.rms_rho_r > tol || f.rms_omega_r > tol;
  const bool local = f.rms_rho_t > tol || f.rms_omega_t > tol;
  if (!shear && !local) return ConditionLabel::balanced_sinusoidal;
  if (shear && f.double_frequency_share >= kPureUnbalanceShare) {
    return ConditionLabel::unbalanced_sinusoidal;
  }
  if (local && f.double_frequency_share <= kPureHarmonicShare) {
    return ConditionLabel::balanced_nonsinusoidal;
  }
  return ConditionLabel::mixed_or_unknown;
}

ConditionLabel classify_samples(std::span<const FrequencySample> series,
                                double omega_est, double tol) {
  return classify_features(features_from_samples(series, omega_est), tol);
}

}  // namespace geofreq
