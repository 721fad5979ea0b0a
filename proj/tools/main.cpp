#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  using geofreq::cli::RunConfig;

  CLI::App app{"Geometric frequency and velocity-field decomposition of multi-phase signals"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string frame = "fundamental";
  double tol = 0.0;

  auto add_fixture = [&](CLI::App* sub) {
    sub->add_option("--case", cfg.case_name, "balanced | unbalanced | harmonic | dc");
    sub->add_option("--f0", cfg.f0, "Fundamental frequency (Hz)")->capture_default_str();
    sub->add_option("--duration", cfg.duration, "Signal length (s)")->capture_default_str();
    sub->add_option("--dt", cfg.dt, "Sample spacing (s)")->capture_default_str();
    sub->add_option("--lambda", cfg.dc_rate, "Rate of the dc fixture (1/s)")->capture_default_str();
  };

  auto* synth = app.add_subcommand("synth", "Write a fixture signal as CSV");
  add_fixture(synth);
  synth->get_option("--case")->required();
  synth->add_flag("--abc", cfg.abc, "Write phase quantities t,v_a,v_b,v_c");
  synth->add_option("-o,--out", cfg.out_path, "Output CSV ('-' for stdout)");

  auto* analyze = app.add_subcommand("analyze", "Geometric frequency of a sampled signal");
  analyze->add_option("-i,--in", cfg.in_path, "Input signal CSV ('-' for stdin)")->required();
  analyze->add_option("-o,--out", cfg.out_path, "Output CSV ('-' for stdout)");

  auto* decompose = app.add_subcommand("decompose", "Velocity-field components of a fixture");
  add_fixture(decompose);
  decompose->get_option("--case")->required();
  decompose->add_option("--frame", frame, "fundamental | harmonic:<h>")->capture_default_str();
  decompose->add_option("-o,--out", cfg.out_path, "Output CSV ('-' for stdout)");

  auto* classify = app.add_subcommand("classify", "Label the operating condition");
  add_fixture(classify);
  classify->add_option("-i,--in", cfg.in_path, "Signal CSV (sampled path)");
  classify->add_option("--tol", tol, "Component threshold (default 1e-3 * 2 pi f0)");
  classify->add_option("-o,--out", cfg.out_path, "Report destination ('-' for stdout)");

  auto* figures = app.add_subcommand("figures", "Write the unbalanced and harmonic figure data");
  figures->add_option("--f0", cfg.f0, "Fundamental frequency (Hz)")->capture_default_str();
  figures->add_option("--duration", cfg.duration, "Signal length (s)")->capture_default_str();
  figures->add_option("--dt", cfg.dt, "Sample spacing (s)")->capture_default_str();
  figures->add_option("-o,--out-dir", cfg.out_path, "Output directory")->required();

  try {
    app.parse(argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.frame = geofreq::cli::parse_frame(frame);
    if (classify->count("--tol") > 0) cfg.tol = tol;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return geofreq::cli::kUsage;
  } catch (const geofreq::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return geofreq::cli::kUsage;
  }
  return geofreq::cli::dispatch(cfg, std::cerr);
}
