#include "rotkit/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rotkit/triangulation.hpp"

namespace rotkit {

ExactCount catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: n must be >= 0");
  ExactCount c = 1;
  for (int k = 0; k < n; ++k) {
    // exact at every step: catalan(k+1) = catalan(k) * (4k+2) / (k+2)
    c *= 4 * k + 2;
    c /= k + 2;
  }
  return c;
}

ExactCount count_instances(int n) {
  if (n < 1) throw std::invalid_argument("count_instances: n must be >= 1");
  ExactCount c = catalan(n);
  return c * c;
}

double catalan_asymptotic(int n) {
  if (n < 1) throw std::invalid_argument("catalan_asymptotic: n must be >= 1");
  double log_value = n * std::log(4.0) - 1.5 * std::log(static_cast<double>(n)) -
                     0.5 * std::log(std::numbers::pi);
  if (log_value >= std::log(std::numeric_limits<double>::max()))
    throw std::overflow_error("catalan_asymptotic: value exceeds double range at n=" +
                              std::to_string(n));
  return std::exp(log_value);
}

ExactCount dihedral_class_count(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_class_count: n must be >= 1");
  long long classes = 0;
  enumerate_class_representatives(n, [&](const Triangulation&, int) { ++classes; });
  return ExactCount(classes);
}

}  // namespace rotkit
