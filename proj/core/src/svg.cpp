#include "cliquetop/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace cliquetop {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

void write_step_plot_svg(std::ostream& os, const StepPlot& plot) {
  const double W = 640, H = 420;
  const double left = 64, right = 20, top = 36, bottom = 48;
  double x_lo = 0, x_hi = 1;
  if (!plot.points.empty()) {
    x_lo = plot.points.front().x;
    x_hi = plot.points.back().x;
  }
  if (plot.vline) {
    x_lo = std::min(x_lo, *plot.vline);
    x_hi = std::max(x_hi, *plot.vline);
  }
  if (x_hi - x_lo < 1e-12) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  double pad = 0.05 * (x_hi - x_lo);
  x_lo -= pad;
  x_hi += pad;
  double y_lo = plot.y_min, y_hi = plot.y_max;
  if (y_hi - y_lo < 1e-12) y_hi = y_lo + 1;

  auto X = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * (W - left - right); };
  auto Y = [&](double y) { return H - bottom - (y - y_lo) / (y_hi - y_lo) * (H - top - bottom); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\""
     << " text-anchor=\"middle\">" << plot.title << "</text>\n";

  // axes
  os << "<line x1=\"" << num(left) << "\" y1=\"" << num(H - bottom) << "\" x2=\"" << num(W - right)
     << "\" y2=\"" << num(H - bottom) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
     << "\" y2=\"" << num(H - bottom) << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double y = y_lo + (y_hi - y_lo) * i / 4.0;
    os << "<line x1=\"" << num(left - 4) << "\" y1=\"" << num(Y(y)) << "\" x2=\"" << num(left)
       << "\" y2=\"" << num(Y(y)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(left - 8) << "\" y=\"" << num(Y(y) + 4)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << label(y)
       << "</text>\n";
  }
  for (const PlotPoint& p : plot.points) {
    os << "<line x1=\"" << num(X(p.x)) << "\" y1=\"" << num(H - bottom) << "\" x2=\""
       << num(X(p.x)) << "\" y2=\"" << num(H - bottom + 4) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(X(p.x)) << "\" y=\"" << num(H - bottom + 17)
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << label(p.x)
       << "</text>\n";
  }
  os << "<text x=\"" << num((left + W - right) / 2) << "\" y=\"" << num(H - 10)
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << plot.x_label
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << num((top + H - bottom) / 2)
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\""
     << " transform=\"rotate(-90 16 " << num((top + H - bottom) / 2) << ")\">" << plot.y_label
     << "</text>\n";

  if (plot.vline && *plot.vline >= x_lo && *plot.vline <= x_hi) {
    double vx = X(*plot.vline);
    os << "<line x1=\"" << num(vx) << "\" y1=\"" << num(top) << "\" x2=\"" << num(vx)
       << "\" y2=\"" << num(H - bottom) << "\" stroke=\"#888\" stroke-dasharray=\"5,4\"/>\n";
    os << "<text x=\"" << num(vx + 4) << "\" y=\"" << num(top + 12)
       << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#555\">" << label(*plot.vline)
       << "</text>\n";
  }

  if (!plot.points.empty()) {
    os << "<path d=\"M " << num(X(plot.points[0].x)) << " " << num(Y(plot.points[0].y));
    for (size_t i = 1; i < plot.points.size(); ++i) {
      os << " H " << num(X(plot.points[i].x));
      os << " V " << num(Y(plot.points[i].y));
    }
    os << "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\"/>\n";
    for (const PlotPoint& p : plot.points) {
      if (p.err > 0) {
        double y1 = std::min(Y(std::max(y_lo, p.y - p.err)), H - bottom);
        double y2 = std::max(Y(std::min(y_hi, p.y + p.err)), top);
        os << "<line x1=\"" << num(X(p.x)) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(X(p.x))
           << "\" y2=\"" << num(y2) << "\" stroke=\"#1f6fb2\"/>\n";
      }
      os << "<circle cx=\"" << num(X(p.x)) << "\" cy=\"" << num(Y(p.y))
         << "\" r=\"3\" fill=\"#1f6fb2\"/>\n";
    }
  }
  os << "</svg>\n";
}

}  // namespace cliquetop
