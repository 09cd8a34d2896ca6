#include "qhyp/geometry/lie.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qhyp/error.hpp"
#include "qhyp/geometry/hyperbolic.hpp"

namespace qhyp::geometry {

namespace {

constexpr const char* kAxis[] = {"1", "i", "j", "k"};

void require_rank(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "sp(m,1) needs m >= 1");
}

}  // namespace

std::string BasisElement::label() const {
  switch (kind) {
    case BasisKind::X:
      return "X" + std::to_string(l1 + 1) + "(" + kAxis[alpha] + ")";
    case BasisKind::Y:
      return "Y" + std::to_string(l1 + 1) + std::to_string(l2 + 1) + "(" + kAxis[alpha] + ")";
    case BasisKind::H:
      return "H" + std::to_string(l1 + 1) + "(" + kAxis[alpha] + ")";
  }
  return {};
}

QMatrix basis_x(std::size_t m, std::size_t l, const Quaternion& alpha) {
  QMatrix a(m + 1);
  a(l, m) = alpha;
  a(m, l) = alpha.conj();
  return a;
}

QMatrix basis_y(std::size_t m, std::size_t l1, std::size_t l2, const Quaternion& alpha) {
  QMatrix a(m + 1);
  a(l1, l2) = alpha;
  a(l2, l1) = -alpha.conj();
  return a;
}

QMatrix basis_h(std::size_t m, std::size_t l, const Quaternion& alpha) {
  QMatrix a(m + 1);
  a(l, l) = alpha.pure();
  return a;
}

std::size_t sp_dimension(std::size_t m) { return 2 * m * m + 5 * m + 3; }

std::vector<BasisElement> lie_basis(std::size_t m) {
  require_rank(m);
  std::vector<BasisElement> out;
  out.reserve(sp_dimension(m));
  for (std::size_t l = 0; l < m; ++l) {
    for (int a = 0; a < 4; ++a) out.push_back({BasisKind::X, l, 0, a, basis_x(m, l, Quaternion::unit(a))});
  }
  for (std::size_t l1 = 0; l1 < m; ++l1) {
    for (std::size_t l2 = l1 + 1; l2 < m; ++l2) {
      for (int a = 0; a < 4; ++a) out.push_back({BasisKind::Y, l1, l2, a, basis_y(m, l1, l2, Quaternion::unit(a))});
    }
  }
  for (std::size_t l = 0; l <= m; ++l) {
    for (int a = 1; a < 4; ++a) out.push_back({BasisKind::H, l, 0, a, basis_h(m, l, Quaternion::unit(a))});
  }
  return out;
}

QMatrix bracket(const QMatrix& a, const QMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "bracket of matrices of different size");
  return a * b - b * a;
}

double lie_membership_defect(const QMatrix& a) {
  const std::size_t n = a.size();
  const QMatrix adj = a.adjoint();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double s = ((i + 1 == n) != (j + 1 == n)) ? -1.0 : 1.0;
      worst = std::max(worst, (adj(i, j) * s + a(i, j)).abs());
    }
  }
  return worst;
}

Eigen::VectorXd coordinates(const QMatrix& a) {
  if (a.size() < 2) throw Error(ErrorCode::DimensionMismatch, "sp(m,1) matrices have size m+1 >= 2");
  const std::size_t m = a.size() - 1;
  Eigen::VectorXd c(static_cast<Eigen::Index>(sp_dimension(m)));
  Eigen::Index k = 0;
  for (std::size_t l = 0; l < m; ++l) {
    for (int s = 0; s < 4; ++s) c[k++] = a(l, m).component(s);
  }
  for (std::size_t l1 = 0; l1 < m; ++l1) {
    for (std::size_t l2 = l1 + 1; l2 < m; ++l2) {
      for (int s = 0; s < 4; ++s) c[k++] = a(l1, l2).component(s);
    }
  }
  for (std::size_t l = 0; l <= m; ++l) {
    for (int s = 1; s < 4; ++s) c[k++] = a(l, l).component(s);
  }
  return c;
}

Eigen::MatrixXd ad_matrix(const QMatrix& a) {
  const std::size_t m = a.size() - 1;
  const auto basis = lie_basis(m);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) out.col(i) = coordinates(bracket(a, basis[static_cast<std::size_t>(i)].matrix));
  return out;
}

double killing_value(const QMatrix& a, const QMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "Killing form of matrices of different size");
  return (ad_matrix(a) * ad_matrix(b)).trace();
}

QMatrix horizontal(const HVector& w) {
  const std::size_t m = w.size();
  QMatrix a(m + 1);
  for (std::size_t l = 0; l < m; ++l) {
    a(l, m) = w[l];
    a(m, l) = w[l].conj();
  }
  return a;
}

BracketTableReport bracket_table_check(std::size_t m) {
  require_rank(m);
  BracketTableReport r;
  auto record = [&r](int which, bool ok) {
    ++r.checked[which];
    if (!ok) ++r.failed[which];
  };
  const QMatrix zero(m + 1);
  for (int s = 0; s < 4; ++s) {
    const Quaternion a1 = Quaternion::unit(s);
    for (int t = 0; t < 4; ++t) {
      const Quaternion a2 = Quaternion::unit(t);
      for (std::size_t a = 0; a < m; ++a) {
        const QMatrix xa = basis_x(m, a, a1);
        for (std::size_t b = a + 1; b < m; ++b) {
          record(0, bracket(xa, basis_x(m, b, a2)) == basis_y(m, a, b, a1 * a2.conj()));
          record(1, bracket(xa, basis_y(m, a, b, a2)) == basis_x(m, b, a2.conj() * a1));
        }
        if (t > 0) {
          for (std::size_t b = 0; b <= m; ++b) {
            if (b != a && b != m) record(2, bracket(xa, basis_h(m, b, a2)) == zero);
          }
        }
        for (std::size_t b = 0; b < m; ++b) {
          for (std::size_t c = b + 1; c < m; ++c) {
            if (a != b && a != c) record(3, bracket(xa, basis_y(m, b, c, a2)) == zero);
          }
        }
      }
    }
  }
  return r;
}

ScalingReport metric_scaling_check(std::size_t m, std::size_t samples, std::uint64_t seed) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "metric scaling needs m >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  ScalingReport r;
  r.expected = 2.0 * (static_cast<double>(m) - 1.0);
  r.min_ratio = INFINITY;
  r.max_ratio = -INFINITY;
  const HVector base = base_point(m);
  for (std::size_t s = 0; s < samples; ++s) {
    HVector w(m);
    for (auto& q : w) q = {normal(rng), normal(rng), normal(rng), normal(rng)};
    const HVector lifted = lift_horizontal(w);
    const double g = metric_at(base, lifted, lifted).w;
    const QMatrix t = horizontal(w);
    const double ratio = killing_value(t, t) / g;
    r.min_ratio = std::min(r.min_ratio, ratio);
    r.max_ratio = std::max(r.max_ratio, ratio);
    r.max_deviation = std::max(r.max_deviation, std::abs(ratio - r.expected));
  }
  return r;
}

}  // namespace qhyp::geometry
