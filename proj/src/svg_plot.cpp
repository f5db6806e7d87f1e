#include "rotkit/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace rotkit {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '&')
      out += "&amp;";
    else if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else
      out += c;
  }
  return out;
}

}  // namespace

std::string render_plot_svg(std::span<const FractionPoint> points, const FitResult* fit,
                            const PlotOptions& options) {
  std::vector<std::pair<double, double>> pts;  // (size, ln value)
  for (const FractionPoint& p : points)
    if (p.value > 0.0) pts.push_back({static_cast<double>(p.size), std::log(p.value)});
  if (pts.empty()) throw std::invalid_argument("plot: no points with positive values");
  std::sort(pts.begin(), pts.end());

  double x_min = pts.front().first, x_max = pts.back().first;
  double y_min = pts.front().second, y_max = y_min;
  for (auto [x, y] : pts) {
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }
  double x_pad = x_max > x_min ? 0.5 : 1.0;
  x_min -= x_pad;
  x_max += x_pad;
  double y_pad = y_max > y_min ? 0.05 * (y_max - y_min) : 1.0;
  y_min -= y_pad;
  y_max += y_pad;

  const double margin_l = 70, margin_r = 20, margin_t = options.title.empty() ? 20 : 40;
  const double margin_b = 50;
  const double plot_w = options.width - margin_l - margin_r;
  const double plot_h = options.height - margin_t - margin_b;
  auto px = [&](double x) { return margin_l + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return margin_t + (y_max - y) / (y_max - y_min) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) +
         "\" height=\"" + std::to_string(options.height) + "\" viewBox=\"0 0 " +
         std::to_string(options.width) + " " + std::to_string(options.height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  svg += "<line class=\"axis\" x1=\"" + fmt(margin_l) + "\" y1=\"" + fmt(margin_t) + "\" x2=\"" +
         fmt(margin_l) + "\" y2=\"" + fmt(margin_t + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line class=\"axis\" x1=\"" + fmt(margin_l) + "\" y1=\"" + fmt(margin_t + plot_h) +
         "\" x2=\"" + fmt(margin_l + plot_w) + "\" y2=\"" + fmt(margin_t + plot_h) +
         "\" stroke=\"black\"/>\n";

  // x ticks at integer sizes
  int x_step = std::max(1, static_cast<int>(std::lround((x_max - x_min) / 6.0)));
  for (int x = static_cast<int>(std::ceil(x_min)); x <= static_cast<int>(std::floor(x_max));
       x += x_step) {
    double cx = px(x);
    svg += "<line x1=\"" + fmt(cx) + "\" y1=\"" + fmt(margin_t + plot_h) + "\" x2=\"" + fmt(cx) +
           "\" y2=\"" + fmt(margin_t + plot_h + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(cx) + "\" y=\"" + fmt(margin_t + plot_h + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(x) + "</text>\n";
  }
  // y ticks
  for (int i = 0; i <= 4; ++i) {
    double y = y_min + (y_max - y_min) * i / 4.0;
    double cy = py(y);
    svg += "<line x1=\"" + fmt(margin_l - 5) + "\" y1=\"" + fmt(cy) + "\" x2=\"" + fmt(margin_l) +
           "\" y2=\"" + fmt(cy) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(margin_l - 8) + "\" y=\"" + fmt(cy + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fmt(y) + "</text>\n";
  }

  // axis labels and title
  svg += "<text x=\"" + fmt(margin_l + plot_w / 2) + "\" y=\"" +
         fmt(margin_t + plot_h + 38) + "\" font-size=\"13\" text-anchor=\"middle\">" +
         escape(options.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt(margin_t + plot_h / 2) +
         "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt(margin_t + plot_h / 2) + ")\">" + escape(options.y_label) + "</text>\n";
  if (!options.title.empty())
    svg += "<text x=\"" + fmt(margin_l + plot_w / 2) +
           "\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">" + escape(options.title) +
           "</text>\n";

  // fit curve under the markers
  if (fit != nullptr && pts.size() >= 2) {
    double ls = std::log(fit->scale), lr = std::log(fit->ratio);
    if (fit->model == FitModel::ExponentialFraction) {
      double yl = ls + lr * x_min, yr = ls + lr * x_max;
      svg += "<line id=\"fit-line\" x1=\"" + fmt(px(x_min)) + "\" y1=\"" + fmt(py(yl)) +
             "\" x2=\"" + fmt(px(x_max)) + "\" y2=\"" + fmt(py(yr)) +
             "\" stroke=\"#c62828\" stroke-width=\"1.5\"/>\n";
    } else {
      double lo = std::max(x_min, 0.5);
      std::string path;
      for (int i = 0; i <= 64; ++i) {
        double x = lo + (x_max - lo) * i / 64.0;
        double y = ls + lr * x - 3.0 * std::log(x);
        path += (i == 0 ? "" : " ") + fmt(px(x)) + "," + fmt(py(y));
      }
      svg += "<polyline id=\"fit-line\" points=\"" + path +
             "\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"1.5\"/>\n";
    }
  }

  for (auto [x, y] : pts)
    svg += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
           "\" r=\"3.5\" fill=\"#1565c0\"/>\n";

  svg += "</svg>\n";
  return svg;
}

void emit_plot(std::span<const FractionPoint> points, const FitResult* fit,
               const std::filesystem::path& path, const PlotOptions& options) {
  std::string svg = render_plot_svg(points, fit, options);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("plot: cannot write " + path.string());
  out << svg;
}

}  // namespace rotkit
