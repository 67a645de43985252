#include "btq/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "btq/report.hpp"

namespace btq {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 150.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 50.0;
constexpr double kMarkerSize = 4.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

std::string num(double x) {
  // Coordinates only need to be stable, not lossless.
  const double r = std::round(x * 1000.0) / 1000.0;
  return format_double(r == 0.0 ? 0.0 : r);
}

std::string tick_label(double x, double step) {
  const int digits = std::max(0, static_cast<int>(std::ceil(-std::log10(step) - 1e-9)));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

void draw_marker(std::ostream& os, Marker marker, double x, double y, const std::string& color) {
  const double s = kMarkerSize;
  if (marker == Marker::Diamond) {
    os << "  <polygon points=\"" << num(x) << ',' << num(y - s) << ' ' << num(x + s) << ','
       << num(y) << ' ' << num(x) << ',' << num(y + s) << ' ' << num(x - s) << ',' << num(y)
       << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\"/>\n";
  } else {
    os << "  <path d=\"M" << num(x - s) << ' ' << num(y - s) << " L" << num(x + s) << ' '
       << num(y + s) << " M" << num(x - s) << ' ' << num(y + s) << " L" << num(x + s) << ' '
       << num(y - s) << "\" stroke=\"" << color << "\" stroke-width=\"1.2\"/>\n";
  }
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / std::max(target, 1);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double f : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = f * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

void ScatterPlot::write(std::ostream& os) const {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series_) {
    for (const auto& p : s.points) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
  }
  if (!(xmax >= xmin)) xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
  auto pad = [](double& lo, double& hi) {
    const double span = hi - lo;
    const double extra = span > 0.0 ? 0.05 * span : std::max(0.05, 0.05 * std::abs(lo));
    lo -= extra;
    hi += extra;
  };
  pad(xmin, xmax);
  pad(ymin, ymax);

  const double plot_w = width_ - kMarginLeft - kMarginRight;
  const double plot_h = height_ - kMarginTop - kMarginBottom;
  auto sx = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double y) { return kMarginTop + (ymax - y) / (ymax - ymin) * plot_h; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width_)
     << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(width_) << ' '
     << num(height_) << "\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
     << "\" fill=\"white\"/>\n"
     << "  <text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << num(kMarginTop / 2 + 5)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << escape(title_)
     << "</text>\n"
     << "  <rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop) << "\" width=\""
     << num(plot_w) << "\" height=\"" << num(plot_h)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  const auto xticks = nice_ticks(xmin, xmax);
  const double xstep = xticks.size() > 1 ? xticks[1] - xticks[0] : 1.0;
  for (double t : xticks) {
    const double x = sx(t);
    const double y0 = kMarginTop + plot_h;
    os << "  <line x1=\"" << num(x) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x) << "\" y2=\""
       << num(y0 + 5) << "\" stroke=\"black\"/>\n"
       << "  <text x=\"" << num(x) << "\" y=\"" << num(y0 + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << tick_label(t, xstep) << "</text>\n";
  }
  const auto yticks = nice_ticks(ymin, ymax);
  const double ystep = yticks.size() > 1 ? yticks[1] - yticks[0] : 1.0;
  for (double t : yticks) {
    const double y = sy(t);
    os << "  <line x1=\"" << num(kMarginLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\""
       << num(kMarginLeft) << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n"
       << "  <text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(y + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << tick_label(t, ystep) << "</text>\n";
  }
  os << "  <text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << num(height_ - 10)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">Re λ</text>\n"
     << "  <text x=\"15\" y=\"" << num(kMarginTop + plot_h / 2)
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 15 "
     << num(kMarginTop + plot_h / 2) << ")\">Im λ</text>\n";

  for (const auto& s : series_) {
    os << "  <g>\n";
    for (const auto& p : s.points) draw_marker(os, s.marker, sx(p.real()), sy(p.imag()), s.color);
    os << "  </g>\n";
  }

  double ly = kMarginTop + 10;
  const double lx = kMarginLeft + plot_w + 20;
  for (const auto& s : series_) {
    draw_marker(os, s.marker, lx, ly, s.color);
    os << "  <text x=\"" << num(lx + 10) << "\" y=\"" << num(ly + 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.name) << "</text>\n";
    ly += 20;
  }
  os << "</svg>\n";
}

}  // namespace btq
