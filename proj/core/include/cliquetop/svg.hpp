#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cliquetop {

struct PlotPoint {
  double x = 0, y = 0, err = 0;
};

struct StepPlot {
  std::string title, x_label, y_label;
  std::vector<PlotPoint> points;  // ascending x
  std::optional<double> vline;    // dashed vertical marker, drawn when in range
  double y_min = 0.0, y_max = 1.0;
};

// Self-contained SVG writer: axes, step path through the points, error
// ticks, optional dashed vertical marker. No dependencies, fixed canvas.
void write_step_plot_svg(std::ostream& os, const StepPlot& plot);

}  // namespace cliquetop
