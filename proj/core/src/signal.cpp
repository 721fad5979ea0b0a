#include "geofreq/signal.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "geofreq/error.hpp"

namespace geofreq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_all(std::initializer_list<double> xs) {
  for (double x : xs) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Rotating phasor r (cos a, sin a, 0) and its derivatives.
void add_rotating(VecN& v, VecN& vp, VecN& flux, double amplitude, double rate,
                  double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  v(0) += amplitude * c;
  v(1) += amplitude * s;
  vp(0) -= amplitude * rate * s;
  vp(1) += amplitude * rate * c;
  flux(0) += amplitude / rate * s;
  flux(1) -= amplitude / rate * c;
}

}  // namespace

void validate(const SignalSpec& spec) {
  std::visit(
      overloaded{
          [](const BalancedSignal& s) {
            require(finite_all({s.amplitude, s.omega, s.phase}),
                    "balanced: non-finite parameter");
            require(s.omega > 0.0, "balanced: omega must be positive");
            require(s.amplitude >= 0.0, "balanced: amplitude must be >= 0");
          },
          [](const UnbalancedSignal& s) {
            require(finite_all({s.amplitude_alpha, s.amplitude_beta, s.omega,
                                s.phase}),
                    "unbalanced: non-finite parameter");
            require(s.omega > 0.0, "unbalanced: omega must be positive");
            require(s.amplitude_alpha >= 0.0 && s.amplitude_beta >= 0.0,
                    "unbalanced: amplitudes must be >= 0");
          },
          [](const HarmonicSignal& s) {
            require(finite_all({s.amplitude, s.omega, s.phase}),
                    "harmonic: non-finite parameter");
            require(s.omega > 0.0, "harmonic: omega must be positive");
            require(s.amplitude >= 0.0, "harmonic: amplitude must be >= 0");
            std::set<int> seen;
            for (const auto& h : s.harmonics) {
              require(h.order >= 2, "harmonic: order must be >= 2");
              require(seen.insert(h.order).second,
                      "harmonic: duplicate order " + std::to_string(h.order));
              require(finite_all({h.amplitude, h.phase}),
                      "harmonic: non-finite harmonic parameter");
              require(h.amplitude >= 0.0,
                      "harmonic: harmonic amplitude must be >= 0");
            }
          },
          [](const DcSignal& s) {
            require(finite_all({s.initial, s.rate}), "dc: non-finite parameter");
          },
      },
      spec);
}

Eigen::Index dimension(const SignalSpec& spec) {
  return std::holds_alternative<DcSignal>(spec) ? 1 : 3;
}

std::optional<double> fundamental_omega(const SignalSpec& spec) {
  return std::visit(
      overloaded{
          [](const DcSignal&) -> std::optional<double> { return std::nullopt; },
          [](const auto& s) -> std::optional<double> { return s.omega; },
      },
      spec);
}

void validate(const SampleGrid& grid) {
  require(std::isfinite(grid.t0) && std::isfinite(grid.dt),
          "grid: non-finite t0/dt");
  require(grid.dt > 0.0, "grid: dt must be positive");
  require(grid.count >= 2, "grid: count must be >= 2");
}

SignalPoint evaluate(const SignalSpec& spec, double t) {
  return std::visit(
      overloaded{
          [t](const BalancedSignal& s) {
            SignalPoint p{VecN::Zero(3), VecN::Zero(3), VecN::Zero(3)};
            add_rotating(p.v, p.v_prime, p.flux, s.amplitude, s.omega,
                         s.omega * t + s.phase);
            return p;
          },
          [t](const UnbalancedSignal& s) {
            const double theta = s.omega * t + s.phase;
            const double c = std::cos(theta);
            const double sn = std::sin(theta);
            SignalPoint p{VecN::Zero(3), VecN::Zero(3), VecN::Zero(3)};
            p.v << s.amplitude_alpha * c, s.amplitude_beta * sn, 0.0;
            p.v_prime << -s.amplitude_alpha * s.omega * sn,
                s.amplitude_beta * s.omega * c, 0.0;
            p.flux << s.amplitude_alpha / s.omega * sn,
                -s.amplitude_beta / s.omega * c, 0.0;
            return p;
          },
          [t](const HarmonicSignal& s) {
            SignalPoint p{VecN::Zero(3), VecN::Zero(3), VecN::Zero(3)};
            add_rotating(p.v, p.v_prime, p.flux, s.amplitude, s.omega,
                         s.omega * t + s.phase);
            for (const auto& h : s.harmonics) {
              const double rate = h.order * s.omega;
              add_rotating(p.v, p.v_prime, p.flux, h.amplitude, rate,
                           rate * t + h.phase);
            }
            return p;
          },
          [t](const DcSignal& s) {
            SignalPoint p{VecN(1), VecN(1), VecN(1)};
            const double e = std::exp(s.rate * t);
            p.v(0) = s.initial * e;
            p.v_prime(0) = s.rate * s.initial * e;
            // expm1 keeps the small-rate limit V_0 t accurate.
            p.flux(0) = s.rate == 0.0 ? s.initial * t
                                      : s.initial / s.rate * std::expm1(s.rate * t);
            return p;
          },
      },
      spec);
}

SignalBundle synthesize(const SignalSpec& spec, const SampleGrid& grid) {
  validate(spec);
  validate(grid);
  SignalBundle out;
  out.grid = grid;
  out.v.reserve(grid.count);
  out.v_prime.reserve(grid.count);
  out.flux.reserve(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    auto p = evaluate(spec, grid.time(i));
    out.v.push_back(std::move(p.v));
    out.v_prime.push_back(std::move(p.v_prime));
    out.flux.push_back(std::move(p.flux));
  }
  return out;
}

Vec3 clarke_forward(const Vec3& abc) {
  const double r3 = std::numbers::sqrt3;
  Eigen::Matrix3d c;
  // clang-format off
  c << 1.0, -0.5,      -0.5,
       0.0,  r3 / 2.0, -r3 / 2.0,
       0.5,  0.5,       0.5;
  // clang-format on
  return (2.0 / 3.0) * (c * abc);
}

Vec3 clarke_inverse(const Vec3& alpha_beta_gamma) {
  const double r3 = std::numbers::sqrt3;
  Eigen::Matrix3d ci;
  // clang-format off
  ci <<  1.0,  0.0,      1.0,
        -0.5,  r3 / 2.0, 1.0,
        -0.5, -r3 / 2.0, 1.0;
  // clang-format on
  return ci * alpha_beta_gamma;
}

Series numeric_derivative(const Series& series, double dt) {
  const std::size_t n = series.size();
  if (n < 3) {
    throw std::invalid_argument("numeric_derivative: need at least 3 samples");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("numeric_derivative: dt <= 0");
  for (const auto& s : series) {
    if (s.size() != series.front().size()) {
      throw DimensionError("numeric_derivative: ragged series");
    }
  }
  Series out(n);
  const double inv2 = 1.0 / (2.0 * dt);
  out[0] = (-3.0 * series[0] + 4.0 * series[1] - series[2]) * inv2;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = (series[i + 1] - series[i - 1]) * inv2;
  }
  out[n - 1] = (3.0 * series[n - 1] - 4.0 * series[n - 2] + series[n - 3]) * inv2;
  return out;
}

Series flux_from_samples(const Series& series, const SampleGrid& grid,
                         std::optional<double> detrend_period) {
  validate(grid);
  if (series.size() != grid.count) {
    throw DimensionError("flux_from_samples: series length != grid count");
  }
  const auto dim = series.front().size();
  Series out(grid.count, VecN::Zero(dim));
  for (std::size_t i = 1; i < grid.count; ++i) {
    if (series[i].size() != dim) {
      throw DimensionError("flux_from_samples: ragged series");
    }
    out[i] = out[i - 1] + 0.5 * grid.dt * (series[i - 1] + series[i]);
  }
  if (!detrend_period) return out;

  const double period = *detrend_period;
  if (!(period > 0.0)) {
    throw std::invalid_argument("flux_from_samples: detrend period must be > 0");
  }
  const double steps = period / grid.dt;
  const auto per = static_cast<std::size_t>(std::llround(steps));
  if (per == 0 || std::abs(steps - static_cast<double>(per)) > 1e-6) {
    throw std::invalid_argument(
        "flux_from_samples: detrend period is not a whole number of samples");
  }
  const std::size_t windows = grid.count / per;
  if (windows == 0) {
    throw std::invalid_argument(
        "flux_from_samples: series shorter than one detrend period");
  }
  const std::size_t used = windows * per;
  VecN mean = VecN::Zero(dim);
  for (std::size_t i = grid.count - used; i < grid.count; ++i) mean += out[i];
  mean /= static_cast<double>(used);
  for (auto& x : out) x -= mean;
  return out;
}

namespace fixtures {

BalancedSignal balanced(double f0) {
  return {1.0, 2.0 * std::numbers::pi * f0, 0.0};
}

UnbalancedSignal unbalanced(double f0) {
  return {1.0, 1.2, 2.0 * std::numbers::pi * f0, std::numbers::pi / 6.0};
}

HarmonicSignal harmonic(double f0) {
  HarmonicSignal s{1.0, 2.0 * std::numbers::pi * f0, std::numbers::pi / 6.0, {}};
  for (int h : {7, 11}) {
    s.harmonics.push_back({h, s.amplitude / (3.0 * h), h * s.phase});
  }
  return s;
}

DcSignal dc(double rate) { return {1.0, rate}; }

}  // namespace fixtures

}  // namespace geofreq
