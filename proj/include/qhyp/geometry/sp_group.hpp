#pragma once

#include <cstdint>

#include "qhyp/geometry/quaternion.hpp"

namespace qhyp::geometry {

/// Max-entry deviation of A* H A - H, H = diag(1, ..., 1, -1).
double sp_deviation(const QMatrix& a);

bool sp_check(const QMatrix& a, double tolerance = 1e-9);

/// Matrix exponential through the 2x2 complex representation
/// a + b j -> [[a, b], [-conj(b), conj(a)]].
QMatrix exp_quaternionic(const QMatrix& x);

/// exp(X) for X a random combination of the sp(m,1) basis with normal
/// coefficients of the given standard deviation.
QMatrix random_sp_element(std::size_t m, std::uint64_t seed, double scale = 0.4);

}  // namespace qhyp::geometry
