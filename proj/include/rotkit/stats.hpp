#pragma once

#include <span>

namespace rotkit {

// One observation for model fitting: `value` is a fraction for exponential
// fits or a raw count for power-cube fits. Non-positive values have no
// logarithm and are excluded from fits and plots.
struct FractionPoint {
  int size = 0;
  double value = 0.0;
};

enum class FitModel { ExponentialFraction, PowerCubeCount };

// Least-squares fit in log space. ExponentialFraction models
// value ~ scale * ratio^size; PowerCubeCount models
// value ~ scale * ratio^size / size^3. rss is the residual sum of squares of
// the log-space regression.
struct FitResult {
  FitModel model = FitModel::ExponentialFraction;
  double scale = 0.0;
  double ratio = 0.0;
  double rss = 0.0;
  int points_used = 0;
};

// Both fits need at least two usable points with distinct sizes and are
// invariant under reordering of the input.
FitResult fit_exponential(std::span<const FractionPoint> points);
FitResult fit_power_cube(std::span<const FractionPoint> points);

// Model value at size n. Power-cube prediction needs n >= 1.
double predict(const FitResult& fit, int n);

}  // namespace rotkit
