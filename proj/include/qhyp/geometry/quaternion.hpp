#pragma once

#include <cmath>
#include <cstddef>
#include <ostream>
#include <vector>

namespace qhyp::geometry {

/// w + x i + y j + z k over the reals.
struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  static constexpr Quaternion unit(int axis) {
    Quaternion q;
    (axis == 0 ? q.w : axis == 1 ? q.x : axis == 2 ? q.y : q.z) = 1.0;
    return q;
  }

  constexpr double component(int axis) const { return axis == 0 ? w : axis == 1 ? x : axis == 2 ? y : z; }
  constexpr double& component(int axis) { return axis == 0 ? w : axis == 1 ? x : axis == 2 ? y : z; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double abs() const { return std::sqrt(norm2()); }
  constexpr Quaternion pure() const { return {0, x, y, z}; }
  Quaternion inverse() const;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
  friend constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, double s) { return a *= 1.0 / s; }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

/// Vector in H^{m+1} (or H^m for horizontal data), scalars acting on the right.
using HVector = std::vector<Quaternion>;

/// Square matrix of quaternions, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t n) : n_(n), data_(n * n) {}
  static QMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  Quaternion& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Quaternion& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Conjugate transpose.
  QMatrix adjoint() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(double s);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, double s) { return a *= s; }
  friend QMatrix operator*(double s, QMatrix a) { return a *= s; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend HVector operator*(const QMatrix& a, const HVector& v);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  /// Largest absolute component over all entries.
  double max_abs() const;

 private:
  std::size_t n_ = 0;
  std::vector<Quaternion> data_;
};

/// v * alpha, entrywise.
HVector right_multiply(const HVector& v, const Quaternion& alpha);

}  // namespace qhyp::geometry
