#include "qhyp/geometry/sp_group.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>
#include <algorithm>
#include <complex>
#include <random>

#include "qhyp/error.hpp"
#include "qhyp/geometry/lie.hpp"

namespace qhyp::geometry {

double sp_deviation(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix h = QMatrix::identity(n);
  h(n - 1, n - 1) = Quaternion{-1, 0, 0, 0};
  return (a.adjoint() * h * a - h).max_abs();
}

bool sp_check(const QMatrix& a, double tolerance) {
  if (a.size() < 2) return false;
  return sp_deviation(a) <= tolerance;
}

QMatrix exp_quaternionic(const QMatrix& x) {
  using C = std::complex<double>;
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = x(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      const C a(q.w, q.x), b(q.y, q.z);
      c(2 * i, 2 * j) = a;
      c(2 * i, 2 * j + 1) = b;
      c(2 * i + 1, 2 * j) = -std::conj(b);
      c(2 * i + 1, 2 * j + 1) = std::conj(a);
    }
  }
  const Eigen::MatrixXcd e = c.exp();
  QMatrix out(x.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const C a = e(2 * i, 2 * j), b = e(2 * i, 2 * j + 1);
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = {a.real(), a.imag(), b.real(), b.imag()};
    }
  }
  return out;
}

QMatrix random_sp_element(std::size_t m, std::uint64_t seed, double scale) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "Sp(m,1) needs m >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, scale);
  QMatrix x(m + 1);
  for (const auto& b : lie_basis(m)) x += b.matrix * normal(rng);
  return exp_quaternionic(x);
}

}  // namespace qhyp::geometry
