#pragma once

// Result tables: CSV with header m,rule,family,r,p,metric,value,tail,seed.
// Doubles are written in shortest round-trip form, so reading a written file
// reproduces the rows exactly.

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "mixdisc/errors.hpp"

namespace mixdisc {

inline constexpr const char* kCsvHeader = "m,rule,family,r,p,metric,value,tail,seed";

struct CsvRow {
  std::int64_t m = 0;
  std::string rule;
  std::string family;
  double r = 0.0;
  double p = 0.0;
  std::string metric;
  double value = 0.0;
  double tail = 0.0;
  std::uint64_t seed = 0;

  friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class T>
T parse_field(const std::string& s, const char* name, std::size_t line) {
  T v{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw DomainError("csv line " + std::to_string(line) + ": bad " + name + " '" + s + "'");
  }
  return v;
}

}  // namespace detail

inline void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
  os << kCsvHeader << '\n';
  for (const CsvRow& row : rows) {
    os << row.m << ',' << row.rule << ',' << row.family << ',' << detail::format_double(row.r) << ','
       << detail::format_double(row.p) << ',' << row.metric << ',' << detail::format_double(row.value) << ','
       << detail::format_double(row.tail) << ',' << row.seed << '\n';
  }
}

inline std::vector<CsvRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw DomainError("csv: unexpected header '" + line + "'");
  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw DomainError("csv line " + std::to_string(line_no) + ": expected 9 fields");
    CsvRow row;
    row.m = detail::parse_field<std::int64_t>(f[0], "m", line_no);
    row.rule = f[1];
    row.family = f[2];
    row.r = detail::parse_field<double>(f[3], "r", line_no);
    row.p = detail::parse_field<double>(f[4], "p", line_no);
    row.metric = f[5];
    row.value = detail::parse_field<double>(f[6], "value", line_no);
    row.tail = detail::parse_field<double>(f[7], "tail", line_no);
    row.seed = detail::parse_field<std::uint64_t>(f[8], "seed", line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mixdisc
