#pragma once

// Least-squares fit of e(m) ~ C m^{-r} (log m)^b in log space:
//   log e = log C - r log m + b log log m.
// Slopes are fitted on centered data (ridge 1e-9 on their normal equations),
// so rescaling every error by c > 0 only moves log C.

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "mixdisc/errors.hpp"

namespace mixdisc {

struct RateFit {
  double C = 0.0;
  double r = 0.0;
  double b = 0.0;
  bool b_frozen = false;
  /// RMS of log-space residuals.
  double residual_rms = 0.0;
  double m_min = 0.0;
  double m_max = 0.0;
  std::size_t points = 0;
};

inline constexpr double kRidge = 1e-9;

/// b_frozen empty: three-parameter fit; otherwise b is held at that value.
inline RateFit fit_rate(const std::vector<std::pair<double, double>>& data, std::optional<double> b_frozen = std::nullopt) {
  if (data.size() < 4) throw DomainError("fit_rate: need at least 4 points");
  const auto n = static_cast<Eigen::Index>(data.size());
  const Eigen::Index slopes = b_frozen ? 1 : 2;
  Eigen::MatrixXd X(n, slopes);
  Eigen::VectorXd y(n);
  RateFit fit;
  fit.m_min = data.front().first;
  fit.m_max = data.front().first;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [m, e] = data[static_cast<std::size_t>(i)];
    if (!(m >= 3.0)) throw DomainError("fit_rate: every m must be >= 3");
    if (!(e > 0.0)) throw DomainError("fit_rate: errors must be positive");
    const double lm = std::log(m);
    const double llm = std::log(lm);
    X(i, 0) = -lm;
    if (!b_frozen) X(i, 1) = llm;
    y(i) = std::log(e) - (b_frozen ? *b_frozen * llm : 0.0);
    fit.m_min = std::min(fit.m_min, m);
    fit.m_max = std::max(fit.m_max, m);
  }
  const Eigen::RowVectorXd x_mean = X.colwise().mean();
  const double y_mean = y.mean();
  const Eigen::MatrixXd Xc = X.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;
  Eigen::MatrixXd normal = Xc.transpose() * Xc;
  normal.diagonal().array() += kRidge;
  const Eigen::VectorXd beta = normal.ldlt().solve(Xc.transpose() * yc);
  const double log_c = y_mean - x_mean.dot(beta);

  fit.r = beta(0);
  fit.b = b_frozen ? *b_frozen : beta(1);
  fit.b_frozen = b_frozen.has_value();
  fit.C = std::exp(log_c);
  fit.points = data.size();
  const Eigen::VectorXd resid = yc - Xc * beta;
  fit.residual_rms = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  return fit;
}

}  // namespace mixdisc
