#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "geofreq/lagrange.hpp"
#include "geofreq/signal.hpp"

namespace geofreq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kSingular = 4,
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string command;
  std::string case_name;
  double f0 = 50.0;
  double duration = 0.04;
  double dt = 1e-5;
  Frame frame = Frame::fundamental();
  /// dc fixture rate (1/s).
  double dc_rate = -0.5;
  /// Write synthesized signals as t,v_a,v_b,v_c phase quantities.
  bool abc = false;
  std::optional<double> tol;
  std::string in_path;
  std::string out_path = "-";
};

/// Fixture names: balanced, unbalanced, harmonic, dc.
SignalSpec fixture_spec(std::string_view name, double f0, double dc_rate = -0.5);

/// "fundamental" or "harmonic:<h>".
Frame parse_frame(std::string_view text);

/// Grid from duration and dt; count = round(duration / dt).
SampleGrid fixture_grid(const RunConfig& cfg);

/// Throws UsageError on inconsistent parameters, including dt too coarse
/// for the highest harmonic (fewer than 40 samples per period).
void check_config(const RunConfig& cfg);

int run_synth(const RunConfig& cfg, std::ostream& out);
int run_analyze(const RunConfig& cfg, std::istream& in, std::ostream& out,
                std::ostream& err);
int run_decompose(const RunConfig& cfg, std::ostream& out);
/// Sampled path when `in` is given, exact component path for cfg.case_name
/// otherwise. Prints the label token, then `key = value` feature lines.
int run_classify(const RunConfig& cfg, std::istream* in, std::ostream& out);
int run_figures(const RunConfig& cfg, const std::filesystem::path& dir);

/// Opens cfg.in_path / cfg.out_path ("-" for stdio), runs cfg.command and
/// maps errors onto exit codes with a diagnostic on `err`.
int dispatch(const RunConfig& cfg, std::ostream& err);

}  // namespace geofreq::cli
