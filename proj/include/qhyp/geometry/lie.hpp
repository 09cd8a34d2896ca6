#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "qhyp/geometry/quaternion.hpp"

namespace qhyp::geometry {

enum class BasisKind { X, Y, H };

/// One element of the standard real basis of sp(m,1). Indices are 0-based;
/// index m is the negative coordinate. alpha is the quaternion axis 0..3.
struct BasisElement {
  BasisKind kind;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  int alpha = 0;
  QMatrix matrix;

  /// "X1(1)", "Y12(i)", "H3(k)" with 1-based indices.
  std::string label() const;
};

/// X_l(alpha): alpha at (l, m), conj(alpha) at (m, l).
QMatrix basis_x(std::size_t m, std::size_t l, const Quaternion& alpha);
/// Y_{l1 l2}(alpha): alpha at (l1, l2), -conj(alpha) at (l2, l1).
QMatrix basis_y(std::size_t m, std::size_t l1, std::size_t l2, const Quaternion& alpha);
/// H_l(alpha): pure alpha at (l, l).
QMatrix basis_h(std::size_t m, std::size_t l, const Quaternion& alpha);

/// The basis in the order X_l(alpha) for l < m, alpha in {1,i,j,k}; then
/// Y_{l1 l2}(alpha) for l1 < l2 < m; then H_l(alpha) for l <= m, alpha in
/// {i,j,k}. Its length is 2m^2 + 5m + 3.
std::vector<BasisElement> lie_basis(std::size_t m);

std::size_t sp_dimension(std::size_t m);

QMatrix bracket(const QMatrix& a, const QMatrix& b);

/// Max-entry deviation of H A* H + A from zero.
double lie_membership_defect(const QMatrix& a);

/// Real coordinates of A in lie_basis order, read from the entries that carry
/// each basis element. Assumes A lies in sp(m,1).
Eigen::VectorXd coordinates(const QMatrix& a);

/// Matrix of ad(A) in the basis: column i holds coordinates of [A, B_i].
Eigen::MatrixXd ad_matrix(const QMatrix& a);

/// Tr(ad A ad B).
double killing_value(const QMatrix& a, const QMatrix& b);

/// T(w): the element of p with w in the last column and conj(w)^T in the last row.
QMatrix horizontal(const HVector& w);

/// Checked and failed counts for the four bracket identities
///   [X_a(s), X_b(t)] = Y_ab(s conj(t))          a < b
///   [X_a(s), Y_ab(t)] = X_b(conj(t) s)          a < b
///   [X_a(s), H_b(t)] = 0                        b not in {a, m}
///   [X_a(s), Y_bc(t)] = 0                       a not in {b, c}
/// over all unit axes s, t. Comparison is exact.
struct BracketTableReport {
  std::size_t checked[4] = {0, 0, 0, 0};
  std::size_t failed[4] = {0, 0, 0, 0};
};

BracketTableReport bracket_table_check(std::size_t m);

struct ScalingReport {
  double expected = 0;
  double max_deviation = 0;
  double min_ratio = 0;
  double max_ratio = 0;
};

/// kappa(W,W) / g(W,W) over random horizontal tangent vectors at [0,1],
/// compared with 2(m-1).
ScalingReport metric_scaling_check(std::size_t m, std::size_t samples, std::uint64_t seed);

}  // namespace qhyp::geometry
