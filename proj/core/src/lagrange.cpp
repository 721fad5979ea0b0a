#include "geofreq/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "geofreq/error.hpp"

namespace geofreq {

VelocityField::VelocityField(Eigen::Index dim, VectorFn eval, VectorFn partial_t,
                             TensorFn jacobian)
    : dim_(dim),
      eval_(std::move(eval)),
      partial_t_(std::move(partial_t)),
      jacobian_(std::move(jacobian)) {
  if (dim_ < 1) throw std::invalid_argument("VelocityField: dim must be >= 1");
  if (!eval_ || !partial_t_ || !jacobian_) {
    throw std::invalid_argument("VelocityField: empty evaluator");
  }
}

void VelocityField::check(const VecN& phi) const {
  if (phi.size() != dim_) {
    throw DimensionError("VelocityField: expected flux of dimension " +
                         std::to_string(dim_) + ", got " +
                         std::to_string(phi.size()));
  }
}

VecN VelocityField::eval(double t, const VecN& phi) const {
  check(phi);
  return eval_(t, phi);
}

VecN VelocityField::partial_t(double t, const VecN& phi) const {
  check(phi);
  return partial_t_(t, phi);
}

Tensor VelocityField::jacobian(double t, const VecN& phi) const {
  check(phi);
  return jacobian_(t, phi);
}

namespace {

// c (cos(rate t + phase), sin(rate t + phase), 0)
struct RotatingDrive {
  double coefficient;
  double rate;
  double phase;
};

// v = A phi + offset + sum of rotating drives. Every family in the library
// takes this form once written in flux coordinates.
struct AffineField {
  Tensor gradient;
  VecN offset;
  std::vector<RotatingDrive> drives;

  VecN eval(double t, const VecN& phi) const {
    VecN v = gradient * phi + offset;
    for (const auto& d : drives) {
      const double a = d.rate * t + d.phase;
      v(0) += d.coefficient * std::cos(a);
      v(1) += d.coefficient * std::sin(a);
    }
    return v;
  }

  VecN partial_t(double t) const {
    VecN dv = VecN::Zero(offset.size());
    for (const auto& d : drives) {
      const double a = d.rate * t + d.phase;
      dv(0) -= d.coefficient * d.rate * std::sin(a);
      dv(1) += d.coefficient * d.rate * std::cos(a);
    }
    return dv;
  }

  VelocityField into_field() const {
    auto self = std::make_shared<const AffineField>(*this);
    return VelocityField(
        offset.size(),
        [self](double t, const VecN& phi) { return self->eval(t, phi); },
        [self](double t, const VecN&) { return self->partial_t(t); },
        [self](double, const VecN&) { return self->gradient; });
  }
};

Tensor planar_rotation(double rate) {
  Tensor a = Tensor::Zero(3, 3);
  a(0, 1) = -rate;
  a(1, 0) = rate;
  return a;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_fundamental(Frame frame, const char* family) {
  if (frame.order != 1) {
    throw std::invalid_argument(std::string("make_field: ") + family +
                                " signals only support the fundamental frame");
  }
}

double magnitude_sq_checked(const VecN& v, double floor) {
  const double m2 = v.squaredNorm();
  const double m = std::sqrt(m2);
  if (!(m > floor) || m2 == 0.0) throw SingularMagnitudeError(m, floor);
  return m2;
}

}  // namespace

VelocityField make_field(const SignalSpec& spec, Frame frame) {
  validate(spec);
  return std::visit(
      overloaded{
          [frame](const BalancedSignal& s) {
            require_fundamental(frame, "balanced");
            return AffineField{planar_rotation(s.omega), VecN::Zero(3), {}}
                .into_field();
          },
          [frame](const UnbalancedSignal& s) {
            require_fundamental(frame, "unbalanced");
            if (!(s.amplitude_alpha > 0.0) || !(s.amplitude_beta > 0.0)) {
              throw std::invalid_argument(
                  "make_field: unbalanced field needs positive amplitudes");
            }
            Tensor a = Tensor::Zero(3, 3);
            a(0, 1) = -s.omega * s.amplitude_alpha / s.amplitude_beta;
            a(1, 0) = s.omega * s.amplitude_beta / s.amplitude_alpha;
            return AffineField{a, VecN::Zero(3), {}}.into_field();
          },
          [frame](const HarmonicSignal& s) {
            const int k = frame.order;
            if (k != 1 &&
                std::none_of(s.harmonics.begin(), s.harmonics.end(),
                             [k](const HarmonicTerm& h) { return h.order == k; })) {
              throw std::invalid_argument("make_field: frame order " +
                                          std::to_string(k) +
                                          " is not a harmonic of the signal");
            }
            // The frame rotation k omega accounts for a fraction k/m of each
            // component of order m; the remainder is an explicit time drive.
            AffineField f{planar_rotation(k * s.omega), VecN::Zero(3), {}};
            auto add = [&](int m, double amplitude, double phase) {
              const double c = (1.0 - static_cast<double>(k) / m) * amplitude;
              if (c != 0.0) f.drives.push_back({c, m * s.omega, phase});
            };
            add(1, s.amplitude, s.phase);
            for (const auto& h : s.harmonics) add(h.order, h.amplitude, h.phase);
            return f.into_field();
          },
          [frame](const DcSignal& s) {
            require_fundamental(frame, "dc");
            Tensor a(1, 1);
            a(0, 0) = s.rate;
            VecN offset(1);
            offset(0) = s.initial;
            return AffineField{a, offset, {}}.into_field();
          },
      },
      spec);
}

FieldDecomposition decompose(const VelocityField& field, double t, const VecN& phi) {
  const Tensor j = field.jacobian(t, phi);
  if (j.rows() != field.dim() || j.cols() != field.dim()) {
    throw DimensionError("decompose: Jacobian shape does not match field");
  }
  auto split = decompose_matrix(j);
  FieldDecomposition out;
  out.divergence = j.trace();
  if (field.dim() == 3) {
    // curl_i = eps_ijk dv_k/dphi_j, i.e. the dual of -2Q under hodge3.
    out.vorticity = -2.0 * hodge3(Bivector::from_matrix(split.rotation, 0.0));
  }
  out.normal = std::move(split.normal);
  out.shear = std::move(split.shear);
  out.rotation = std::move(split.rotation);
  return out;
}

VecN lagrange_derivative(const VelocityField& field, double t, const VecN& phi) {
  const VecN v = field.eval(t, phi);
  const auto d = decompose(field, t, phi);
  return field.partial_t(t, phi) + d.normal * v + d.shear * v + d.rotation * v;
}

FrequencyComponents frequency_components(const VelocityField& field, double t,
                                         const VecN& phi, double magnitude_floor) {
  const VecN v = field.eval(t, phi);
  const VecN dv = field.partial_t(t, phi);
  const double m2 = magnitude_sq_checked(v, magnitude_floor);
  const auto d = decompose(field, t, phi);
  const VecN rv = d.shear * v;

  FrequencyComponents c;
  c.rho_t = v.dot(dv) / m2;
  c.rho_s = d.divergence / static_cast<double>(field.dim());
  c.rho_r = v.dot(rv) / m2;
  if (field.dim() == 3) {
    c.omega_t = cross3(v, dv) / m2;
    c.omega_r = cross3(v, rv) / m2;
    c.half_w = 0.5 * d.vorticity;
  }
  c.rho_v = c.rho_t + c.rho_s + c.rho_r;
  c.omega_v = c.omega_t + c.omega_r + c.half_w;
  return c;
}

ComponentSeries component_series(const SignalSpec& spec, const SampleGrid& grid,
                                 Frame frame) {
  validate(grid);
  const auto field = make_field(spec, frame);
  ComponentSeries out{grid, {}};
  out.values.reserve(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double t = grid.time(i);
    out.values.push_back(frequency_components(field, t, evaluate(spec, t).flux));
  }
  return out;
}

double helmholtz_residual(const VelocityField& field, double t, const VecN& phi,
                          double magnitude_floor) {
  const VecN v = field.eval(t, phi);
  const double m2 = magnitude_sq_checked(v, magnitude_floor);
  return wedge(v, field.partial_t(t, phi)).norm() / m2;
}

Tensor fd_jacobian(const VelocityField& field, double t, const VecN& phi,
                   double step) {
  if (!(step > 0.0)) throw std::invalid_argument("fd_jacobian: step must be > 0");
  const auto n = field.dim();
  Tensor j(n, n);
  VecN p = phi;
  for (Eigen::Index c = 0; c < n; ++c) {
    p(c) = phi(c) + step;
    const VecN up = field.eval(t, p);
    p(c) = phi(c) - step;
    const VecN down = field.eval(t, p);
    p(c) = phi(c);
    j.col(c) = (up - down) / (2.0 * step);
  }
  return j;
}

Series integrate_streamline(const VelocityField& field, const VecN& phi0,
                            const SampleGrid& grid) {
  validate(grid);
  if (phi0.size() != field.dim()) {
    throw DimensionError("integrate_streamline: initial flux has wrong dimension");
  }
  Series out;
  out.reserve(grid.count);
  out.push_back(phi0);
  const double h = grid.dt;
  VecN phi = phi0;
  for (std::size_t i = 1; i < grid.count; ++i) {
    const double t = grid.time(i - 1);
    const VecN k1 = field.eval(t, phi);
    const VecN k2 = field.eval(t + 0.5 * h, phi + 0.5 * h * k1);
    const VecN k3 = field.eval(t + 0.5 * h, phi + 0.5 * h * k2);
    const VecN k4 = field.eval(t + h, phi + h * k3);
    phi += (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4);
    if (!phi.allFinite()) {
      throw std::runtime_error("integrate_streamline: non-finite state at step " +
                               std::to_string(i));
    }
    out.push_back(phi);
  }
  return out;
}

UnbalanceFactors unbalance_factors(const UnbalancedSignal& signal) {
  const double a = signal.amplitude_alpha;
  const double b = signal.amplitude_beta;
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("unbalance_factors: amplitudes must be positive");
  }
  return {0.5 * (b / a - a / b), 0.5 * (a / b + b / a)};
}

std::vector<HarmonicDistortion> harmonic_distortion(const HarmonicSignal& signal,
                                                    double t) {
  validate(signal);
  const VecN v = evaluate(signal, t).v;
  const double m2 = magnitude_sq_checked(v, 0.0);
  std::vector<HarmonicDistortion> out;
  out.reserve(signal.harmonics.size());
  for (const auto& h : signal.harmonics) {
    const double theta_h = h.order * signal.omega * t + h.phase;
    const double c = (h.order - 1) * signal.omega * h.amplitude;
    const double dx = -c * std::sin(theta_h);
    const double dy = c * std::cos(theta_h);
    out.push_back({h.order, (v(0) * dx + v(1) * dy) / m2,
                   (v(0) * dy - v(1) * dx) / m2});
  }
  return out;
}

}  // namespace geofreq
