#include "rotkit/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rotkit {

namespace {

FitResult ols_log(std::span<const FractionPoint> points, FitModel model) {
  bool cube = model == FitModel::PowerCubeCount;
  std::vector<std::pair<double, double>> xy;
  for (const FractionPoint& p : points) {
    if (p.value <= 0.0) continue;
    if (cube && p.size < 1) continue;
    double y = std::log(p.value);
    if (cube) y += 3.0 * std::log(static_cast<double>(p.size));
    xy.push_back({static_cast<double>(p.size), y});
  }
  if (xy.size() < 2)
    throw std::invalid_argument("fit: need at least two points with positive values");

  double n = static_cast<double>(xy.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : xy) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit: all points share one size");
  double slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / n;

  double rss = 0;
  for (auto [x, y] : xy) {
    double r = y - (slope * x + intercept);
    rss += r * r;
  }
  return {model, std::exp(intercept), std::exp(slope), rss, static_cast<int>(xy.size())};
}

}  // namespace

FitResult fit_exponential(std::span<const FractionPoint> points) {
  return ols_log(points, FitModel::ExponentialFraction);
}

FitResult fit_power_cube(std::span<const FractionPoint> points) {
  return ols_log(points, FitModel::PowerCubeCount);
}

double predict(const FitResult& fit, int n) {
  double value = fit.scale * std::pow(fit.ratio, n);
  if (fit.model == FitModel::PowerCubeCount) {
    if (n < 1) throw std::invalid_argument("predict: power-cube model needs n >= 1");
    value /= static_cast<double>(n) * n * n;
  }
  return value;
}

}  // namespace rotkit
