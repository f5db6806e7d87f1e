#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "rotkit/stats.hpp"

namespace rotkit {

struct PlotOptions {
  int width = 640;
  int height = 440;
  std::string x_label = "size";
  std::string y_label = "log value";
  std::string title;
};

// Scatter of (size, ln value) with labeled axes. Points with value <= 0 are
// omitted; throws when nothing remains. The fit curve (marked id="fit-line")
// is drawn only when a fit is given and at least two points are plottable.
std::string render_plot_svg(std::span<const FractionPoint> points, const FitResult* fit,
                            const PlotOptions& options = {});
void emit_plot(std::span<const FractionPoint> points, const FitResult* fit,
               const std::filesystem::path& path, const PlotOptions& options = {});

}  // namespace rotkit
