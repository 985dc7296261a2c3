// Worst-case integration errors of Fibonacci rules over the Fourier hull
// class, next to equal-size random point sets, with log-log rate fits.

#include <cstdio>
#include <vector>

#include "mixdisc/mixdisc.hpp"

int main() {
  using namespace mixdisc;
  const ClassSpec hull{ClassFamily::FourierHull, 1.5, 2.0};
  std::vector<std::pair<double, double>> fib, rnd;
  std::printf("%6s %14s %14s %14s\n", "m", "fibonacci", "random", "random tail");
  for (int n = 6; n <= 16; ++n) {
    const CubatureRule f = fibonacci_rule(n);
    const ErrorReport ef = worst_case_error(f, hull);
    const ErrorReport er = worst_case_error(random_rule(f.size(), 2, derive_seed(1, static_cast<std::uint64_t>(n))), hull, 128);
    std::printf("%6zu %14.6e %14.6e %14.6e\n", f.size(), ef.value, er.value, er.tail);
    fib.emplace_back(static_cast<double>(f.size()), ef.value);
    rnd.emplace_back(static_cast<double>(f.size()), er.value);
  }
  std::printf("fibonacci: %s\n", describe(fit_rate(fib, 1.0)).c_str());
  std::printf("random:    %s\n", describe(fit_rate(rnd, 0.0)).c_str());
  return 0;
}
