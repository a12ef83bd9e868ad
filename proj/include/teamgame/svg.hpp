#pragma once

// Minimal static line plots.

#include <iosfwd>
#include <string>
#include <vector>

namespace teamgame {

struct Series {
  std::string label;
  std::vector<double> y;
};

/// One polyline per series against the shared x values, in a fixed 640x400
/// frame with the data range printed on the axes.
void write_svg_plot(std::ostream& out, const std::string& title, const std::string& x_label,
                    const std::vector<double>& x, const std::vector<Series>& series);

}  // namespace teamgame
