#pragma once

// Plain-text coefficient files:
//   d N_1 ... N_d
//   k_1 ... k_d re im        (one line per stored frequency)
// Frequencies absent from the file are zero.

#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "mixdisc/trig_poly.hpp"

namespace mixdisc {

inline void write_coeffs(std::ostream& os, const TrigPoly& f) {
  os << f.dim();
  for (int n : f.box()) os << ' ' << n;
  os << '\n';
  const auto old_prec = os.precision(std::numeric_limits<double>::max_digits10);
  f.for_each([&](std::span<const int> k, cplx c) {
    for (int kj : k) os << kj << ' ';
    os << c.real() << ' ' << c.imag() << '\n';
  });
  os.precision(old_prec);
}

inline TrigPoly read_coeffs(std::istream& is) {
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return true;
    }
    return false;
  };
  if (!next_line()) throw DomainError("coefficient file: missing header");
  std::istringstream header(line);
  int d = 0;
  if (!(header >> d) || d < 1) throw DomainError("coefficient file: bad dimension in header");
  std::vector<int> box(static_cast<std::size_t>(d));
  for (int& n : box) {
    if (!(header >> n) || n < 0) throw DomainError("coefficient file: bad degree bound in header");
  }
  TrigPoly f(box);
  std::vector<int> k(static_cast<std::size_t>(d));
  std::size_t line_no = 1;
  while (next_line()) {
    ++line_no;
    std::istringstream row(line);
    for (int& kj : k) {
      if (!(row >> kj)) throw DomainError("coefficient file: bad frequency on entry " + std::to_string(line_no));
    }
    double re = 0.0, im = 0.0;
    if (!(row >> re >> im)) throw DomainError("coefficient file: bad value on entry " + std::to_string(line_no));
    if (!f.in_box(k)) throw DomainError("coefficient file: frequency outside declared box on entry " + std::to_string(line_no));
    f.at(k) = {re, im};
  }
  return f;
}

}  // namespace mixdisc
