#pragma once

#include <optional>
#include <vector>

#include "qhyp/geometry/quaternion.hpp"

namespace qhyp::geometry {

/// Real span of vectors in H^m.
struct SubspaceSpan {
  std::vector<HVector> vectors;
  double tolerance = 1e-9;
};

enum class SubspaceType { TotallyReal, TotallyComplex, TotallyQuaternionic, NotLieTriple };

const char* to_string(SubspaceType t) noexcept;

/// v h0(w,u) - w h0(v,u) - u (h0(v,w) - h0(w,v)), the horizontal part of
/// [[T(v), T(w)], T(u)].
HVector triple_product(const HVector& v, const HVector& w, const HVector& u);

/// Largest relative distance from the span of a triple product of basis
/// vectors.
double closure_defect(const SubspaceSpan& span);

bool lie_triple_closure(const SubspaceSpan& span);

struct Classification {
  SubspaceType type = SubspaceType::NotLieTriple;
  /// Unit pure quaternion with h0(W,W) in R(delta), for the complex case.
  std::optional<Quaternion> delta;
};

Classification classify_subspace(const SubspaceSpan& span);

}  // namespace qhyp::geometry
