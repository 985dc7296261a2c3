#pragma once

// Minimal log-log line plots as standalone SVG.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace mixdisc {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (m, value), both > 0
};

namespace detail {

inline std::string svg_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

inline void write_loglog_svg(std::ostream& os, const std::vector<PlotSeries>& series, const std::string& title) {
  constexpr double W = 720, H = 480, L = 80, R = 200, T = 40, Bm = 60;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& s : series) {
    for (auto [x, y] : s.points) {
      x0 = std::min(x0, std::log10(x));
      x1 = std::max(x1, std::log10(x));
      y0 = std::min(y0, std::log10(y));
      y1 = std::max(y1, std::log10(y));
    }
  }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  x0 = std::floor(x0), x1 = std::max(std::ceil(x1), x0 + 1);
  y0 = std::floor(y0), y1 = std::max(std::ceil(y1), y0 + 1);
  auto px = [&](double lx) { return L + (lx - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double ly) { return H - Bm - (ly - y0) / (y1 - y0) * (H - T - Bm); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << detail::svg_escape(title) << "</text>\n";
  for (int e = static_cast<int>(x0); e <= static_cast<int>(x1); ++e) {
    os << "<line x1=\"" << px(e) << "\" y1=\"" << T << "\" x2=\"" << px(e) << "\" y2=\"" << H - Bm << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << px(e) << "\" y=\"" << H - Bm + 18 << "\" text-anchor=\"middle\">1e" << e << "</text>\n";
  }
  for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); ++e) {
    os << "<line x1=\"" << L << "\" y1=\"" << py(e) << "\" x2=\"" << W - R << "\" y2=\"" << py(e) << "\" stroke=\"#ddd\"/>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << py(e) + 4 << "\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 16 << "\" text-anchor=\"middle\">m</text>\n";
  os << "<text x=\"20\" y=\"" << (T + H - Bm) / 2 << "\" transform=\"rotate(-90 20 " << (T + H - Bm) / 2 << ")\" text-anchor=\"middle\">error</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kColors[i % 6];
    auto pts = series[i].points;
    std::sort(pts.begin(), pts.end());
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : pts) os << px(std::log10(x)) << ',' << py(std::log10(y)) << ' ';
    os << "\"/>\n";
    for (auto [x, y] : pts) os << "<circle cx=\"" << px(std::log10(x)) << "\" cy=\"" << py(std::log10(y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    const double ly = T + 20 + 18.0 * static_cast<double>(i);
    os << "<line x1=\"" << W - R + 16 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 40 << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << W - R + 46 << "\" y=\"" << ly + 4 << "\">" << detail::svg_escape(series[i].label) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace mixdisc
