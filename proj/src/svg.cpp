#include "teamgame/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace teamgame {

namespace {

constexpr double kWidth = 640.0, kHeight = 400.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 36.0, kBottom = 44.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Distinct hues around the colour wheel.
std::string colour(std::size_t i, std::size_t n) {
  const int hue = n > 0 ? static_cast<int>(300.0 * static_cast<double>(i) / std::max<std::size_t>(1, n)) : 0;
  return "hsl(" + std::to_string(hue) + ",70%,40%)";
}

}  // namespace

void write_svg_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                    const std::vector<double>& x, const std::vector<Series>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (double v : x) {
    xmin = std::min(xmin, v);
    xmax = std::max(xmax, v);
  }
  for (const auto& s : series) {
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(xmax > xmin)) { xmin -= 0.5; xmax += 0.5; }
  if (!(ymax > ymin)) { ymin -= 0.5; ymax += 0.5; }
  if (!std::isfinite(xmin)) { xmin = 0.0; xmax = 1.0; }
  if (!std::isfinite(ymin)) { ymin = 0.0; ymax = 1.0; }

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double v) { return kTop + (ymax - v) / (ymax - ymin) * ph; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
      << "</text>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (ymin < 0.0 && ymax > 0.0) {
    out << "<line x1=\"" << kLeft << "\" x2=\"" << kLeft + pw << "\" y1=\"" << py(0.0) << "\" y2=\"" << py(0.0)
        << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  out << "<text x=\"" << kLeft << "\" y=\"" << kHeight - 24 << "\">" << fmt(xmin) << "</text>\n";
  out << "<text x=\"" << kLeft + pw << "\" y=\"" << kHeight - 24 << "\" text-anchor=\"end\">" << fmt(xmax)
      << "</text>\n";
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 8 << "\" text-anchor=\"middle\">"
      << escape(x_label) << "</text>\n";
  out << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4 << "\" text-anchor=\"end\">" << fmt(ymax)
      << "</text>\n";
  out << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + ph << "\" text-anchor=\"end\">" << fmt(ymin)
      << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    out << "<polyline fill=\"none\" stroke=\"" << colour(i, series.size()) << "\" stroke-width=\"1.2\" points=\"";
    const std::size_t n = std::min(x.size(), s.y.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(s.y[j])) continue;
      out << fmt(px(x[j])) << ',' << fmt(py(s.y[j])) << (j + 1 < n ? " " : "");
    }
    out << "\"><title>" << escape(s.label) << "</title></polyline>\n";
  }
  out << "</svg>\n";
}

}  // namespace teamgame
