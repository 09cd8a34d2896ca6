#include "qhyp/geometry/hyperbolic.hpp"

#include <algorithm>
#include <string>

#include "qhyp/error.hpp"

namespace qhyp::geometry {

namespace {

double real_h(const HVector& v, const HVector& w) { return form_h(v, w).w; }

void require_negative(const HVector& v) {
  if (!(real_h(v, v) < 0)) throw Error(ErrorCode::NonNegativeVector, "vector is not negative under h");
}

}  // namespace

Quaternion form_h(const HVector& v, const HVector& w) {
  if (v.size() != w.size() || v.empty()) {
    throw Error(ErrorCode::DimensionMismatch,
                "h needs equal nonempty lengths, got " + std::to_string(v.size()) + " and " + std::to_string(w.size()));
  }
  Quaternion s;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) s += v[i].conj() * w[i];
  s -= v.back().conj() * w.back();
  return s;
}

Quaternion form_h0(const HVector& v, const HVector& w) {
  if (v.size() != w.size()) throw Error(ErrorCode::DimensionMismatch, "h0 needs equal lengths");
  Quaternion s;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i].conj() * w[i];
  return s;
}

HVector base_point(std::size_t m) {
  HVector v(m + 1);
  v[m] = Quaternion{1, 0, 0, 0};
  return v;
}

HVector lift_horizontal(const HVector& w) {
  HVector v = w;
  v.emplace_back();
  return v;
}

double distance(const HVector& v1, const HVector& v2, double clamp_tolerance) {
  require_negative(v1);
  require_negative(v2);
  const double h11 = real_h(v1, v1);
  const double h22 = real_h(v2, v2);
  const double arg = std::sqrt(form_h(v1, v2).norm2() / (h11 * h22));
  if (arg < 1.0 - clamp_tolerance) {
    throw Error(ErrorCode::InvalidArgument, "distance argument " + std::to_string(arg) + " below 1");
  }
  // cosh^2(d/2) - 1 = sinh^2(d/2) = -h(u,u) / h22, where u is the component of
  // v2 orthogonal to v1. Evaluated this way the result stays accurate for
  // nearby lines, where arccosh near 1 loses half the digits.
  HVector u = v2;
  const HVector p = projection(v1, v2);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] -= p[i];
  const double s2 = std::max(0.0, -real_h(u, u) / h22);
  return 2.0 * std::asinh(std::sqrt(s2));
}

HVector projection(const HVector& v, const HVector& w) {
  const double hvv = real_h(v, v);
  if (hvv == 0) throw Error(ErrorCode::InvalidArgument, "projection onto a null vector");
  return right_multiply(v, form_h(v, w) / hvv);
}

Quaternion metric_at(const HVector& v, const HVector& w1, const HVector& w2) {
  require_negative(v);
  const double hvv = real_h(v, v);
  const Quaternion num = hvv * form_h(w1, w2) - form_h(w1, v) * form_h(v, w2);
  return num * (-4.0 / (hvv * hvv));
}

HVector ball_line_convert(const HVector& v) {
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty vector");
  double scale = 0;
  for (const auto& q : v) scale = std::max(scale, q.abs());
  const Quaternion last = v.back();
  if (last.abs() <= 1e-14 * std::max(scale, 1e-300)) {
    throw Error(ErrorCode::PointAtInfinity, "last entry is zero");
  }
  HVector out = right_multiply(v, last.inverse());
  out.back() = Quaternion{1, 0, 0, 0};
  return out;
}

bool in_ball(const HVector& v, double tolerance) {
  if (v.empty() || (v.back() - Quaternion{1, 0, 0, 0}).abs() > tolerance) return false;
  double s = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) s += v[i].norm2();
  return s < 1.0;
}

}  // namespace qhyp::geometry
