#include "lvc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "lvc/errors.hpp"

namespace lvc {

namespace {

constexpr double kWidth = 880, kHeight = 520;
constexpr double kLeft = 70, kRight = 700, kTop = 46, kBottom = 470;

std::string num(double v, int digits = 2) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void emit_plot(const std::string& path, const std::string& title,
               const std::vector<PlotSeries>& series) {
  bool any = false;
  for (const auto& s : series) any = any || !s.x.empty();
  if (!any) throw ConfigError("plot: nothing to draw");

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    if (s.x.size() != s.y.size()) throw ConfigError("plot: x/y size mismatch");
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (xmax <= xmin) { xmin -= 1; xmax += 1; }
  if (ymax <= ymin) { ymin -= 1; ymax += 1; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); };

  std::ofstream out(path);
  if (!out) throw ConfigError("plot: cannot write '" + path + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"24\" font-family=\"sans-serif\""
      << " font-size=\"15\" text-anchor=\"middle\">" << title << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kRight - kLeft
      << "\" height=\"" << kBottom - kTop
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    const double xv = xmin + (xmax - xmin) * t / 5.0;
    const double yv = ymin + (ymax - ymin) * t / 5.0;
    out << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << kBottom << "\" x2=\""
        << num(px(xv)) << "\" y2=\"" << kBottom + 5 << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << num(px(xv)) << "\" y=\"" << kBottom + 20
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << tick_label(xv) << "</text>\n";
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << num(py(yv)) << "\" stroke=\"#333333\"/>\n";
    out << "<text x=\"" << kLeft - 9 << "\" y=\"" << num(py(yv) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
        << tick_label(yv) << "</text>\n";
  }

  for (const auto& s : series) {
    if (s.x.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\""
        << s.width << "\"";
    if (s.dashed) out << " stroke-dasharray=\"8,5\"";
    out << " points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) out << ' ';
      out << num(px(s.x[i])) << ',' << num(py(s.y[i]));
    }
    out << "\"/>\n";
  }

  double ly = kTop + 14;
  for (const auto& s : series) {
    if (s.label.empty()) continue;
    out << "<line x1=\"" << kRight + 16 << "\" y1=\"" << num(ly - 4) << "\" x2=\""
        << kRight + 48 << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color
        << "\" stroke-width=\"" << s.width << "\""
        << (s.dashed ? " stroke-dasharray=\"8,5\"" : "") << "/>\n";
    out << "<text x=\"" << kRight + 54 << "\" y=\"" << num(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label << "</text>\n";
    ly += 18;
  }
  out << "</svg>\n";
}

}  // namespace lvc
