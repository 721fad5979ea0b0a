#pragma once

// Time-series CSV: a header row starting with "t", one row per sample,
// comma separated, LF line endings, values written with 12 significant
// digits.

#include <iosfwd>
#include <string>
#include <vector>

#include "geofreq/signal.hpp"

namespace geofreq::csv {

struct Table {
  std::vector<std::string> columns;  // columns[0] == "t"
  std::vector<std::vector<double>> rows;
};

/// Throws ParseError with the 1-based line number on malformed input:
/// missing/invalid header, wrong field count, unparseable or non-finite
/// numbers (except the literal "nan"), or an empty body.
Table read(std::istream& in);

void write(std::ostream& out, const Table& table);

/// Formats a double the way `write` does.
std::string format(double x);

/// Signal columns: t followed by one column per component. Column names are
/// v_alpha, v_beta, v_gamma for three components and v_dc for one.
Table signal_table(const SampleGrid& grid, const Series& v);

/// Inverse of signal_table. A header of t,v_a,v_b,v_c is taken as phase
/// quantities and mapped through clarke_forward. The time step must be
/// uniform to a relative 1e-6.
struct SampledSignal {
  SampleGrid grid;
  Series v;
};

SampledSignal to_signal(const Table& table);

}  // namespace geofreq::csv
