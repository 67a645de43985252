#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "btq/types.hpp"

namespace btq {

enum class Marker { Diamond, Cross };

struct ScatterSeries {
  std::string name;
  std::vector<cplx> points;  // x = real part, y = imaginary part
  Marker marker = Marker::Diamond;
  std::string color = "blue";
};

/// Static SVG 1.1 scatter plot of points in the complex plane, with axis
/// ticks and a legend.
class ScatterPlot {
 public:
  ScatterPlot(std::string title, double width = 800.0, double height = 400.0)
      : title_(std::move(title)), width_(width), height_(height) {}

  void add(ScatterSeries series) { series_.push_back(std::move(series)); }
  void write(std::ostream& os) const;

 private:
  std::string title_;
  double width_;
  double height_;
  std::vector<ScatterSeries> series_;
};

/// Roughly `target` evenly spaced round tick positions covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace btq
