#include "qhyp/geometry/lie_triple.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qhyp/error.hpp"
#include "qhyp/geometry/hyperbolic.hpp"

namespace qhyp::geometry {

namespace {

Eigen::VectorXd flatten(const HVector& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(4 * v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (int s = 0; s < 4; ++s) out[static_cast<Eigen::Index>(4 * i) + s] = v[i].component(s);
  }
  return out;
}

HVector unflatten(const Eigen::VectorXd& x) {
  HVector out(static_cast<std::size_t>(x.size() / 4));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int s = 0; s < 4; ++s) out[i].component(s) = x[static_cast<Eigen::Index>(4 * i) + s];
  }
  return out;
}

// Orthonormal basis (columns) of the real span, rank cut at the tolerance.
Eigen::MatrixXd orthonormal_basis(const SubspaceSpan& span) {
  if (span.vectors.empty()) throw Error(ErrorCode::InvalidArgument, "empty spanning set");
  const std::size_t m = span.vectors.front().size();
  Eigen::MatrixXd a(static_cast<Eigen::Index>(4 * m), static_cast<Eigen::Index>(span.vectors.size()));
  for (std::size_t i = 0; i < span.vectors.size(); ++i) {
    if (span.vectors[i].size() != m) throw Error(ErrorCode::DimensionMismatch, "spanning vectors differ in length");
    a.col(static_cast<Eigen::Index>(i)) = flatten(span.vectors[i]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0) throw Error(ErrorCode::InvalidArgument, "spanning set is zero");
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > span.tolerance * sv[0]) ++rank;
  return svd.matrixU().leftCols(rank);
}

}  // namespace

const char* to_string(SubspaceType t) noexcept {
  switch (t) {
    case SubspaceType::TotallyReal: return "totally-real";
    case SubspaceType::TotallyComplex: return "totally-complex";
    case SubspaceType::TotallyQuaternionic: return "totally-quaternionic";
    case SubspaceType::NotLieTriple: return "not-lie-triple";
  }
  return "?";
}

HVector triple_product(const HVector& v, const HVector& w, const HVector& u) {
  const Quaternion hwu = form_h0(w, u), hvu = form_h0(v, u);
  const Quaternion c = form_h0(v, w) - form_h0(w, v);
  HVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * hwu - w[i] * hvu - u[i] * c;
  return out;
}

double closure_defect(const SubspaceSpan& span) {
  const Eigen::MatrixXd q = orthonormal_basis(span);
  std::vector<HVector> b;
  for (Eigen::Index i = 0; i < q.cols(); ++i) b.push_back(unflatten(q.col(i)));
  double worst = 0;
  for (const auto& v : b) {
    for (const auto& w : b) {
      for (const auto& u : b) {
        const Eigen::VectorXd a = flatten(triple_product(v, w, u));
        worst = std::max(worst, (a - q * (q.transpose() * a)).norm());
      }
    }
  }
  return worst;
}

bool lie_triple_closure(const SubspaceSpan& span) { return closure_defect(span) <= span.tolerance; }

Classification classify_subspace(const SubspaceSpan& span) {
  Classification out;
  if (!lie_triple_closure(span)) return out;
  const Eigen::MatrixXd q = orthonormal_basis(span);
  std::vector<HVector> b;
  for (Eigen::Index i = 0; i < q.cols(); ++i) b.push_back(unflatten(q.col(i)));

  std::vector<Eigen::Vector3d> pure;
  double largest = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Quaternion h = form_h0(b[i], b[j]);
      pure.emplace_back(h.x, h.y, h.z);
      largest = std::max(largest, pure.back().norm());
    }
  }
  if (largest <= span.tolerance) {
    out.type = SubspaceType::TotallyReal;
    return out;
  }

  // Dominant pure direction by least squares over all pure parts.
  Eigen::MatrixXd p(3, static_cast<Eigen::Index>(pure.size()));
  for (std::size_t i = 0; i < pure.size(); ++i) p.col(static_cast<Eigen::Index>(i)) = pure[i];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(p, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  if (sv.size() > 1 && sv[1] > span.tolerance * std::max(1.0, sv[0])) {
    out.type = SubspaceType::TotallyQuaternionic;
    return out;
  }
  Eigen::Vector3d d = svd.matrixU().col(0);
  for (int s = 0; s < 3; ++s) {
    if (std::abs(d[s]) > span.tolerance) {
      if (d[s] < 0) d = -d;
      break;
    }
  }
  out.type = SubspaceType::TotallyComplex;
  out.delta = Quaternion{0, d[0], d[1], d[2]};
  return out;
}

}  // namespace qhyp::geometry
