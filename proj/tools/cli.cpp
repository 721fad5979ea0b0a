#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include "geofreq/classify.hpp"
#include "geofreq/csv.hpp"
#include "geofreq/error.hpp"
#include "geofreq/geomfreq.hpp"

namespace geofreq::cli {

namespace {

constexpr int kMinSamplesPerHarmonicPeriod = 40;

int highest_order(const SignalSpec& spec) {
  int h = 1;
  if (const auto* s = std::get_if<HarmonicSignal>(&spec)) {
    for (const auto& term : s->harmonics) h = std::max(h, term.order);
  }
  return h;
}

double omega_of(double f0) { return 2.0 * std::numbers::pi * f0; }

std::ostream& put(std::ostream& out, std::string_view key, double value) {
  return out << key << " = " << csv::format(value) << '\n';
}

}  // namespace

SignalSpec fixture_spec(std::string_view name, double f0, double dc_rate) {
  if (name == "balanced") return fixtures::balanced(f0);
  if (name == "unbalanced") return fixtures::unbalanced(f0);
  if (name == "harmonic") return fixtures::harmonic(f0);
  if (name == "dc") return fixtures::dc(dc_rate);
  throw UsageError("unknown case '" + std::string(name) +
                   "' (expected balanced, unbalanced, harmonic or dc)");
}

Frame parse_frame(std::string_view text) {
  if (text == "fundamental") return Frame::fundamental();
  constexpr std::string_view prefix = "harmonic:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    int h = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), h);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && h >= 2) {
      return Frame::harmonic(h);
    }
  }
  throw UsageError("invalid frame '" + std::string(text) +
                   "' (expected fundamental or harmonic:<h>)");
}

SampleGrid fixture_grid(const RunConfig& cfg) {
  const auto count = static_cast<std::size_t>(std::llround(cfg.duration / cfg.dt));
  return {0.0, cfg.dt, count};
}

void check_config(const RunConfig& cfg) {
  if (!(cfg.f0 > 0.0) || !std::isfinite(cfg.f0)) throw UsageError("--f0 must be > 0");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) throw UsageError("--dt must be > 0");
  if (!(cfg.duration > 0.0) || !std::isfinite(cfg.duration)) {
    throw UsageError("--duration must be > 0");
  }
  if (cfg.tol && !(*cfg.tol > 0.0)) throw UsageError("--tol must be > 0");
  if (!cfg.case_name.empty()) {
    const auto spec = fixture_spec(cfg.case_name, cfg.f0, cfg.dc_rate);
    const int h = highest_order(spec);
    if (std::holds_alternative<HarmonicSignal>(spec) &&
        !(cfg.dt < 1.0 / (kMinSamplesPerHarmonicPeriod * cfg.f0 * h))) {
      throw UsageError("--dt too coarse: need at least 40 samples per period of "
                       "harmonic " + std::to_string(h));
    }
    if (cfg.abc && std::holds_alternative<DcSignal>(spec)) {
      throw UsageError("--abc needs a three-phase case");
    }
  }
  if (fixture_grid(cfg).count < 3) throw UsageError("need at least 3 samples");
}

int run_synth(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const auto spec = fixture_spec(cfg.case_name, cfg.f0, cfg.dc_rate);
  const auto bundle = synthesize(spec, fixture_grid(cfg));
  auto table = csv::signal_table(bundle.grid, bundle.v);
  if (cfg.abc) {
    table.columns = {"t", "v_a", "v_b", "v_c"};
    for (auto& r : table.rows) {
      const Vec3 abc = clarke_inverse(Vec3(r[1], r[2], r[3]));
      r = {r[0], abc(0), abc(1), abc(2)};
    }
  }
  csv::write(out, table);
  return kOk;
}

int run_analyze(const RunConfig&, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const auto signal = csv::to_signal(csv::read(in));
  const auto series = geometric_frequency_series(signal.v, signal.grid);
  const bool three = signal.v.front().size() == 3;

  csv::Table table;
  table.columns = {"t", "rho"};
  if (three) table.columns.insert(table.columns.end(), {"omega_x", "omega_y", "omega_z"});
  std::size_t singular = 0;
  const double nan = std::nan("");
  for (const auto& s : series) {
    std::vector<double> r{s.t};
    if (s.value) {
      r.push_back(s.value->rho);
      if (three) r.insert(r.end(), {(*s.value->omega)(0), (*s.value->omega)(1), (*s.value->omega)(2)});
    } else {
      ++singular;
      r.insert(r.end(), three ? 4 : 1, nan);
    }
    table.rows.push_back(std::move(r));
  }
  csv::write(out, table);
  if (singular > 0) {
    err << "analyze: " << singular
        << " sample(s) below the magnitude guard were written as nan\n";
    return kSingular;
  }
  return kOk;
}

int run_decompose(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  const auto spec = fixture_spec(cfg.case_name, cfg.f0, cfg.dc_rate);
  const auto series = component_series(spec, fixture_grid(cfg), cfg.frame);

  csv::Table table;
  table.columns = {"t",         "rho_t",     "rho_s",    "rho_r",    "rho_v",
                   "omega_t_z", "omega_r_z", "half_w_z", "omega_v_z"};
  for (std::size_t i = 0; i < series.values.size(); ++i) {
    const auto& c = series.values[i];
    table.rows.push_back({series.grid.time(i), c.rho_t, c.rho_s, c.rho_r, c.rho_v,
                          c.omega_t.z(), c.omega_r.z(), c.half_w.z(), c.omega_v.z()});
  }
  csv::write(out, table);
  return kOk;
}

int run_classify(const RunConfig& cfg, std::istream* in, std::ostream& out) {
  check_config(cfg);
  const double omega = omega_of(cfg.f0);
  const double tol = cfg.tol.value_or(default_tolerance(omega));

  if (in != nullptr) {
    const auto signal = csv::to_signal(csv::read(*in));
    const auto series = geometric_frequency_series(signal.v, signal.grid);
    const auto f = features_from_samples(series, omega);
    out << to_string(classify_features(f, tol)) << '\n';
    out << "path = sampled\n";
    put(out, "tol", tol);
    put(out, "rms_rho_r", f.rms_rho_r);
    put(out, "rms_rho_t", f.rms_rho_t);
    put(out, "rms_omega_r", f.rms_omega_r);
    put(out, "rms_omega_t", f.rms_omega_t);
    put(out, "mean_rho_v", f.mean_rho_v);
    put(out, "mean_omega_v", f.mean_omega_v);
    put(out, "dominant_ripple_ratio", f.dominant_ripple_ratio);
    put(out, "double_frequency_share", f.double_frequency_share);
    out << "periods = " << f.periods << '\n';
    return kOk;
  }

  if (cfg.case_name.empty()) throw UsageError("classify needs --in or --case");
  const auto spec = fixture_spec(cfg.case_name, cfg.f0, cfg.dc_rate);
  const auto series = component_series(spec, fixture_grid(cfg), cfg.frame);
  const auto fundamental = fundamental_omega(spec);
  const auto label = classify_components(series, tol, fundamental);

  double rho_t = 0, rho_s = 0, rho_r = 0, om_t = 0, om_r = 0, half_w = 0;
  for (const auto& c : series.values) {
    rho_t += c.rho_t * c.rho_t;
    rho_s += c.rho_s * c.rho_s;
    rho_r += c.rho_r * c.rho_r;
    om_t += c.omega_t.squaredNorm();
    om_r += c.omega_r.squaredNorm();
    half_w += c.half_w.norm();
  }
  const double n = static_cast<double>(series.values.size());
  out << to_string(label) << '\n';
  out << "path = exact\n";
  put(out, "tol", tol);
  put(out, "rms_rho_t", std::sqrt(rho_t / n));
  put(out, "rms_rho_s", std::sqrt(rho_s / n));
  put(out, "rms_rho_r", std::sqrt(rho_r / n));
  put(out, "rms_omega_t", std::sqrt(om_t / n));
  put(out, "rms_omega_r", std::sqrt(om_r / n));
  put(out, "mean_half_w", half_w / n);
  if (fundamental) put(out, "rotation_factor", half_w / n / *fundamental);
  return kOk;
}

int run_figures(const RunConfig& cfg, const std::filesystem::path& dir) {
  RunConfig c = cfg;
  c.case_name = "harmonic";  // strictest dt check covers both figures
  check_config(c);
  std::filesystem::create_directories(dir);
  const auto grid = fixture_grid(cfg);

  auto emit = [&](const SignalSpec& spec, const std::filesystem::path& file,
                  bool shear) {
    const auto bundle = synthesize(spec, grid);
    const auto gf = geometric_frequency_series(bundle, DerivativeSource::analytic);
    const auto comp = component_series(spec, grid);
    csv::Table table;
    if (shear) {
      table.columns = {"t",     "v_alpha",   "v_beta",    "rho_v",
                       "rho_r", "omega_v_z", "omega_r_z", "half_w_z"};
    } else {
      table.columns = {"t",     "v_alpha",   "v_beta",    "rho_v",
                       "rho_t", "omega_v_z", "omega_t_z", "half_w_z"};
    }
    const auto* harmonic = std::get_if<HarmonicSignal>(&spec);
    if (harmonic) {
      for (const auto& h : harmonic->harmonics) {
        table.columns.push_back("rho_h" + std::to_string(h.order));
        table.columns.push_back("omega_h" + std::to_string(h.order));
      }
    }
    for (std::size_t i = 0; i < grid.count; ++i) {
      const auto& x = comp.values[i];
      const auto& g = *gf[i].value;
      std::vector<double> r{grid.time(i), bundle.v[i](0), bundle.v[i](1), g.rho,
                            shear ? x.rho_r : x.rho_t, g.omega->z(),
                            shear ? x.omega_r.z() : x.omega_t.z(), x.half_w.z()};
      if (harmonic) {
        for (const auto& d : harmonic_distortion(*harmonic, grid.time(i))) {
          r.push_back(d.rho);
          r.push_back(d.omega);
        }
      }
      table.rows.push_back(std::move(r));
    }
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    csv::write(out, table);
  };

  emit(fixtures::unbalanced(cfg.f0), dir / "fig1_unbalanced.csv", true);
  emit(fixtures::harmonic(cfg.f0), dir / "fig2_harmonic.csv", false);
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& err) {
  try {
    std::ofstream file_out;
    std::ostream* out = &std::cout;
    auto open_out = [&]() {
      if (cfg.out_path != "-") {
        file_out.open(cfg.out_path, std::ios::binary);
        if (!file_out) throw UsageError("cannot open output '" + cfg.out_path + "'");
        out = &file_out;
      }
    };
    std::ifstream file_in;
    std::istream* in = nullptr;
    auto open_in = [&]() {
      if (cfg.in_path.empty()) return;
      if (cfg.in_path == "-") {
        in = &std::cin;
        return;
      }
      file_in.open(cfg.in_path, std::ios::binary);
      if (!file_in) throw UsageError("cannot open input '" + cfg.in_path + "'");
      in = &file_in;
    };

    if (cfg.command == "synth") {
      check_config(cfg);
      open_out();
      return run_synth(cfg, *out);
    }
    if (cfg.command == "analyze") {
      if (cfg.in_path.empty()) throw UsageError("analyze needs --in");
      open_in();
      open_out();
      return run_analyze(cfg, *in, *out, err);
    }
    if (cfg.command == "decompose") {
      check_config(cfg);
      open_out();
      return run_decompose(cfg, *out);
    }
    if (cfg.command == "classify") {
      open_in();
      open_out();
      return run_classify(cfg, in, *out);
    }
    if (cfg.command == "figures") {
      return run_figures(cfg, cfg.out_path == "-" ? "." : cfg.out_path);
    }
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const SingularMagnitudeError& e) {
    err << "numeric singularity: " << e.what() << '\n';
    return kSingular;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace geofreq::cli
