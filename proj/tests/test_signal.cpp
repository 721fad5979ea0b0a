#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "geofreq/error.hpp"
#include "geofreq/signal.hpp"

namespace geofreq {
namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_error(const Series& a, const Series& b, std::size_t from = 0,
                     std::size_t to = 0) {
  if (to == 0) to = a.size();
  double e = 0.0;
  for (std::size_t i = from; i < to; ++i) e = std::max(e, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return e;
}

TEST(Clarke, BalancedPhasesMapToAlpha) {
  const double a = std::sqrt(2.0);
  const Vec3 abc(a, a * std::cos(-2.0 * kPi / 3.0), a * std::cos(2.0 * kPi / 3.0));
  const Vec3 abg = clarke_forward(abc);
  EXPECT_NEAR(abg(0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(abg(1), 0.0, 1e-15);
  EXPECT_NEAR(abg(2), 0.0, 1e-15);
}

TEST(Clarke, ForwardHandValues) {
  EXPECT_TRUE(clarke_forward(Vec3(1, 1, 1)).isApprox(Vec3(0, 0, 1)));
  EXPECT_EQ(clarke_forward(Vec3::Zero()), Vec3::Zero());
}

TEST(Clarke, InverseHandValues) {
  const double r2 = std::sqrt(2.0);
  EXPECT_TRUE(clarke_inverse(Vec3(r2, 0, 0)).isApprox(r2 * Vec3(1, -0.5, -0.5)));
  EXPECT_TRUE(clarke_inverse(Vec3(0, 0, 1)).isApprox(Vec3(1, 1, 1)));
}

TEST(Clarke, BalancedThetaSweepStaysInPlane) {
  for (double th = 0.0; th < 2.0 * kPi; th += 0.1) {
    const Vec3 abc(std::cos(th), std::cos(th - 2 * kPi / 3), std::cos(th + 2 * kPi / 3));
    const Vec3 abg = clarke_forward(abc);
    EXPECT_NEAR(abg(0), std::cos(th), 1e-14);
    EXPECT_NEAR(abg(1), std::sin(th), 1e-14);
    EXPECT_NEAR(abg(2), 0.0, 1e-14);
  }
}

TEST(Synthesize, BalancedAtOrigin) {
  const auto spec = BalancedSignal{1.0, 2.0 * kPi * 50.0, 0.0};
  const auto b = synthesize(spec, {0.0, 1e-4, 4});
  EXPECT_NEAR((b.v[0] - Vec3(1, 0, 0)).norm(), 0.0, 1e-15);
  EXPECT_NEAR((b.v_prime[0] - Vec3(0, 100 * kPi, 0)).norm(), 0.0, 1e-12);
  EXPECT_NEAR((b.flux[0] - Vec3(0, -1.0 / (100 * kPi), 0)).norm(), 0.0, 1e-15);
}

TEST(Synthesize, BalancedGammaIsIdenticallyZero) {
  const auto b = synthesize(fixtures::balanced(), {0.0, 1e-4, 400});
  for (const auto& v : b.v) EXPECT_EQ(v(2), 0.0);
}

TEST(Synthesize, UnbalancedFlux) {
  const auto spec = fixtures::unbalanced();
  const auto b = synthesize(spec, {0.0, 1e-4, 200});
  const double w = 2 * kPi * 50;
  for (std::size_t i = 0; i < b.grid.count; ++i) {
    const double th = w * b.grid.time(i) + kPi / 6;
    EXPECT_NEAR(b.flux[i](0), std::sin(th) / w, 1e-15);
    EXPECT_NEAR(b.flux[i](1), -1.2 * std::cos(th) / w, 1e-15);
    EXPECT_EQ(b.flux[i](2), 0.0);
  }
}

TEST(Synthesize, HarmonicFluxUsesPerOrderScale) {
  const auto spec = fixtures::harmonic();
  const auto p = evaluate(spec, 0.0);
  const double w = 2 * kPi * 50;
  double expect_alpha = std::sin(kPi / 6) / w;
  for (int h : {7, 11}) expect_alpha += (1.0 / (3.0 * h)) / (h * w) * std::sin(h * kPi / 6);
  EXPECT_NEAR(p.flux(0), expect_alpha, 1e-16);
}

TEST(Synthesize, ConstantDc) {
  const auto b = synthesize(DcSignal{1.0, 0.0}, {0.0, 0.5, 5});
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(b.v[i](0), 1.0);
    EXPECT_EQ(b.flux[i](0), b.grid.time(i));
  }
}

TEST(Synthesize, ExponentialDc) {
  const auto b = synthesize(fixtures::dc(), {0.0, 0.1, 11});
  for (std::size_t i = 0; i < b.grid.count; ++i) {
    const double t = b.grid.time(i);
    EXPECT_NEAR(b.v[i](0), std::exp(-0.5 * t), 1e-15);
    EXPECT_NEAR(b.flux[i](0), (std::exp(-0.5 * t) - 1.0) / -0.5, 1e-15);
  }
}

TEST(Validate, RejectsBadSpecs) {
  EXPECT_THROW(validate(BalancedSignal{1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(validate(UnbalancedSignal{-1.0, 1.0, 1.0, 0.0}), std::invalid_argument);
  HarmonicSignal h{1.0, 1.0, 0.0, {{7, 0.1, 0.0}, {7, 0.2, 0.0}}};
  EXPECT_THROW(validate(h), std::invalid_argument);
  h.harmonics = {{1, 0.1, 0.0}};
  EXPECT_THROW(validate(h), std::invalid_argument);
  EXPECT_THROW(validate(SampleGrid{0.0, 0.0, 10}), std::invalid_argument);
  EXPECT_THROW(validate(SampleGrid{0.0, 1.0, 1}), std::invalid_argument);
}

TEST(NumericDerivative, QuadraticIsExactInside) {
  const double dt = 0.1;
  Series s;
  for (int i = 0; i < 20; ++i) {
    const double t = i * dt;
    s.push_back(VecN::Constant(1, t * t));
  }
  const auto d = numeric_derivative(s, dt);
  for (int i = 0; i < 20; ++i) EXPECT_NEAR(d[i](0), 2.0 * i * dt, 1e-12);
}

TEST(NumericDerivative, ConstantGivesZero) {
  const Series s(10, Vec3(1, -2, 3));
  for (const auto& d : numeric_derivative(s, 0.01)) EXPECT_TRUE(d.isZero(0.0));
}

TEST(NumericDerivative, TooShortThrows) {
  EXPECT_THROW(numeric_derivative(Series(2, VecN::Zero(1)), 0.1), std::invalid_argument);
}

TEST(NumericDerivative, BalancedMatchesAnalytic) {
  const auto b = synthesize(fixtures::balanced(), {0.0, 1e-6, 20001});
  const auto d = numeric_derivative(b.v, b.grid.dt);
  EXPECT_LE(max_abs_error(d, b.v_prime), 1e-4 * 100 * kPi);
}

TEST(NumericDerivative, SecondOrderConvergence) {
  // Halving dt over the same time span should cut the error by ~4.
  double previous = 0.0;
  for (double dt : {4e-5, 2e-5, 1e-5}) {
    const auto count = static_cast<std::size_t>(std::llround(0.02 / dt)) + 1;
    const auto b = synthesize(fixtures::harmonic(), {0.0, dt, count});
    const double err = max_abs_error(numeric_derivative(b.v, dt), b.v_prime);
    if (previous > 0.0) {
      EXPECT_GE(previous / err, 3.5);
    }
    previous = err;
  }
}

TEST(FluxFromSamples, BalancedOnePeriod) {
  const auto b = synthesize(fixtures::balanced(), {0.0, 1e-5, 2001});
  const auto flux = flux_from_samples(b.v, b.grid, 0.02);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < flux.size(); ++i) {
    num += (flux[i] - b.flux[i]).squaredNorm();
    den += b.flux[i].squaredNorm();
  }
  EXPECT_LE(std::sqrt(num / den), 1e-6);
}

TEST(FluxFromSamples, ZeroInput) {
  const SampleGrid g{0.0, 1e-3, 50};
  for (const auto& f : flux_from_samples(Series(50, Vec3::Zero()), g, 0.01)) {
    EXPECT_TRUE(f.isZero(0.0));
  }
}

TEST(FluxFromSamples, ConstantDcIsExactAtNodes) {
  const auto b = synthesize(DcSignal{2.0, 0.0}, {0.0, 0.01, 101});
  const auto flux = flux_from_samples(b.v, b.grid);
  for (std::size_t i = 0; i < flux.size(); ++i) {
    EXPECT_NEAR(flux[i](0), 2.0 * b.grid.time(i), 1e-13);
  }
}

TEST(FluxFromSamples, PeriodNotOnGridThrows) {
  const SampleGrid g{0.0, 1e-3, 50};
  EXPECT_THROW(flux_from_samples(Series(50, Vec3::Zero()), g, 0.0105), std::invalid_argument);
  EXPECT_THROW(flux_from_samples(Series(50, Vec3::Zero()), g, 1.0), std::invalid_argument);
}

TEST(FluxFromSamples, AcFamiliesMatchAnalyticFlux) {
  const std::vector<SignalSpec> specs{fixtures::balanced(), fixtures::unbalanced(),
                                      fixtures::harmonic()};
  for (const auto& spec : specs) {
    const auto b = synthesize(spec, {0.0, 1e-5, 4000});
    const auto flux = flux_from_samples(b.v, b.grid, 0.02);
    double num = 0.0;
    for (std::size_t i = 0; i < flux.size(); ++i) num += (flux[i] - b.flux[i]).squaredNorm();
    const double phi_scale = 1.0 / (2 * kPi * 50);
    EXPECT_LE(std::sqrt(num / flux.size()), 1e-5 * phi_scale);
  }
}

}  // namespace
}  // namespace geofreq
