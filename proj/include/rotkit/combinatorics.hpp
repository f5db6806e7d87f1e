#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rotkit {

// Arbitrary-precision count. Census totals pass 10^13 by size 14 and class
// counts keep growing, so fixed-width integers are not enough everywhere.
using ExactCount = boost::multiprecision::cpp_int;

// Number of rooted binary trees with n internal nodes, n >= 0.
ExactCount catalan(int n);

// Number of ordered tree pairs of size n, i.e. catalan(n)^2, n >= 1.
ExactCount count_instances(int n);

// Leading-order approximation 4^n / (n^{3/2} sqrt(pi)), n >= 1. Throws
// std::overflow_error once the value exceeds the double range instead of
// returning infinity.
double catalan_asymptotic(int n);

// Number of dihedral symmetry classes of triangulations of the (n+2)-gon,
// n >= 1, counted by canonical-form bucketing. Cost grows with catalan(n);
// intended for n up to the census range.
ExactCount dihedral_class_count(int n);

}  // namespace rotkit
