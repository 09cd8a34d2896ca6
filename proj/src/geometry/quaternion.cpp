#include "qhyp/geometry/quaternion.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhyp::geometry {

Quaternion Quaternion::inverse() const { return conj() / norm2(); }

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << ", " << q.x << "i, " << q.y << "j, " << q.z << "k)";
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Quaternion{1, 0, 0, 0};
  return out;
}

QMatrix QMatrix::adjoint() const {
  QMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(double s) {
  for (auto& q : data_) q *= s;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("matrix size mismatch");
  QMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Quaternion& ail = a(i, l);
      if (ail.norm2() == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += ail * b(l, j);
    }
  return out;
}

HVector operator*(const QMatrix& a, const HVector& v) {
  const std::size_t n = a.size();
  if (v.size() != n) throw std::invalid_argument("vector size mismatch");
  HVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += a(i, j) * v[j];
  return out;
}

double QMatrix::max_abs() const {
  double m = 0;
  for (const auto& q : data_) {
    m = std::max({m, std::abs(q.w), std::abs(q.x), std::abs(q.y), std::abs(q.z)});
  }
  return m;
}

HVector right_multiply(const HVector& v, const Quaternion& alpha) {
  HVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * alpha;
  return out;
}

}  // namespace qhyp::geometry
