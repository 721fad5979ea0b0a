#include "geofreq/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>

#include "geofreq/error.hpp"

namespace geofreq::csv {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view field, std::size_t row, std::size_t col) {
  field = trim(field);
  if (field == "nan" || field == "NaN") return std::numeric_limits<double>::quiet_NaN();
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError(row, "column " + std::to_string(col + 1) +
                              ": invalid number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Table read(std::istream& in) {
  Table table;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    const auto view = trim(line);
    if (row == 1) {
      for (auto name : split(view)) table.columns.emplace_back(trim(name));
      if (table.columns.size() < 2 || table.columns.front() != "t") {
        throw ParseError(row, "header must start with 't' and name at least one "
                              "signal column");
      }
      continue;
    }
    if (view.empty()) continue;
    const auto fields = split(view);
    if (fields.size() != table.columns.size()) {
      throw ParseError(row, "expected " + std::to_string(table.columns.size()) +
                                " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> values;
    values.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      values.push_back(parse_number(fields[c], row, c));
    }
    if (std::isnan(values.front())) throw ParseError(row, "time is nan");
    table.rows.push_back(std::move(values));
  }
  if (row == 0) throw ParseError(1, "empty input");
  if (table.rows.empty()) throw ParseError(row + 1, "no data rows");
  return table;
}

std::string format(double x) {
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& r : table.rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << format(r[c]);
    out << '\n';
  }
}

Table signal_table(const SampleGrid& grid, const Series& v) {
  if (v.size() != grid.count) {
    throw DimensionError("signal_table: series length != grid count");
  }
  Table table;
  const auto n = v.empty() ? 0 : v.front().size();
  table.columns = {"t"};
  if (n == 1) {
    table.columns.emplace_back("v_dc");
  } else if (n == 3) {
    table.columns.insert(table.columns.end(), {"v_alpha", "v_beta", "v_gamma"});
  } else {
    for (Eigen::Index i = 0; i < n; ++i) table.columns.push_back("v_" + std::to_string(i));
  }
  table.rows.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::vector<double> r{grid.time(i)};
    r.insert(r.end(), v[i].data(), v[i].data() + v[i].size());
    table.rows.push_back(std::move(r));
  }
  return table;
}

SampledSignal to_signal(const Table& table) {
  const std::size_t rows = table.rows.size();
  if (rows < 3) throw ParseError(rows + 1, "need at least 3 data rows");
  const bool phases = table.columns.size() == 4 && table.columns[1] == "v_a" &&
                      table.columns[2] == "v_b" && table.columns[3] == "v_c";
  const double t0 = table.rows.front()[0];
  const double dt = (table.rows.back()[0] - t0) / static_cast<double>(rows - 1);
  if (!(dt > 0.0)) throw ParseError(2, "time column must be increasing");

  SampledSignal s;
  s.grid = {t0, dt, rows};
  s.v.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& r = table.rows[i];
    if (std::abs(r[0] - s.grid.time(i)) > 1e-6 * dt) {
      throw ParseError(i + 2, "non-uniform time step");
    }
    VecN v = Eigen::Map<const VecN>(r.data() + 1, static_cast<Eigen::Index>(r.size() - 1));
    for (Eigen::Index c = 0; c < v.size(); ++c) {
      if (std::isnan(v(c))) throw ParseError(i + 2, "nan in signal column");
    }
    if (phases) v = clarke_forward(Vec3(v(0), v(1), v(2)));
    s.v.push_back(std::move(v));
  }
  return s;
}

}  // namespace geofreq::csv
