#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qhyp/field.hpp"
#include "qhyp/local_symbols.hpp"

namespace qhyp {

/// (positive count, negative count) at a real place.
using Signature = std::pair<int, int>;

/// Diagonal form <a_1, ..., a_n> over k, all a_i nonzero.
class QuadraticForm {
 public:
  QuadraticForm(Field field, std::vector<FieldElement> coefficients);

  const Field& field() const noexcept { return field_; }
  const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }
  FieldElement det() const;

  /// Orthogonal sum.
  QuadraticForm operator+(const QuadraticForm& other) const;
  /// <lambda> tensor q.
  QuadraticForm scaled(const FieldElement& lambda) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  Field field_;
  std::vector<FieldElement> coeffs_;
};

struct LocalQuadInvariants {
  Place place;
  std::size_t dim = 0;
  /// Representative of the determinant's square class.
  FieldElement det;
  SymbolValue hasse = 1;
  /// Present at real places only.
  std::optional<Signature> signature;
};

/// Equal dimension, Hasse invariant and signature, and determinants in the
/// same class of k_v*/k_v*^2. Both sides must describe the same place.
bool operator==(const LocalQuadInvariants& x, const LocalQuadInvariants& y);

/// dim, det class and c(q) = prod_{i<j} (a_i, a_j)_v at v.
LocalQuadInvariants local_invariants(const QuadraticForm& q, const Place& v);

/// Throws NotARealPlace unless v is real.
Signature signature_at(const QuadraticForm& q, const Place& v);

/// Places outside this set cannot carry a nontrivial local invariant of q:
/// every coefficient is a unit at a non-dyadic unramified place there.
std::vector<Place> form_support(const QuadraticForm& q);

/// Isometry over k via dim, det class, Hasse invariants on the support and
/// real signatures. Throws FieldMismatch.
bool forms_isometric(const QuadraticForm& q1, const QuadraticForm& q2);

bool isotropic_at(const QuadraticForm& q, const Place& v);
/// Hasse principle over the support set; see the source for the binary case.
bool isotropic_global(const QuadraticForm& q);

}  // namespace qhyp
