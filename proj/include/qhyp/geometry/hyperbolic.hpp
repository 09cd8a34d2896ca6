#pragma once

#include "qhyp/geometry/quaternion.hpp"

namespace qhyp::geometry {

/// h(v, w) = sum_{i<=m} conj(v_i) w_i - conj(v_{m+1}) w_{m+1}. Throws
/// DimensionMismatch on unequal lengths.
Quaternion form_h(const HVector& v, const HVector& w);

/// Positive definite form sum conj(v_i) w_i on horizontal vectors in H^m.
Quaternion form_h0(const HVector& v, const HVector& w);

/// The negative vector (0, ..., 0, 1) in H^{m,1}.
HVector base_point(std::size_t m);

/// Lift of a horizontal vector w in H^m to (w, 0) in H^{m+1}.
HVector lift_horizontal(const HVector& w);

/// Hyperbolic distance 2 arccosh(sqrt(h12 h21 / (h11 h22))) between negative
/// vectors. Throws NonNegativeVector; an argument below 1 by more than
/// clamp_tolerance is reported as InvalidArgument.
double distance(const HVector& v1, const HVector& v2, double clamp_tolerance = 1e-12);

/// proj_v(w) = v h(v,w) / h(v,v).
HVector projection(const HVector& v, const HVector& w);

/// -4 (h(v,v) h(w1,w2) - h(w1,v) h(v,w2)) / h(v,v)^2; its real part is the
/// Riemannian metric g. Throws NonNegativeVector.
Quaternion metric_at(const HVector& v, const HVector& w1, const HVector& w2);

/// Normalize the last coordinate to 1 by right multiplication. Throws
/// PointAtInfinity when the last entry vanishes.
HVector ball_line_convert(const HVector& v);

/// sum_{i<=m} |v_i|^2 < 1 for a vector whose last entry is 1.
bool in_ball(const HVector& v, double tolerance = 1e-12);

}  // namespace qhyp::geometry
