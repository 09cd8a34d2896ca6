#pragma once

#include <vector>

#include "qhyp/quadratic_form.hpp"
#include "qhyp/quaternion_algebra.hpp"

namespace qhyp {

/// Hermitian form over D given by a diagonal of central (k-valued) entries.
class HermitianForm {
 public:
  HermitianForm(QuaternionAlgebra algebra, std::vector<FieldElement> coefficients);

  const QuaternionAlgebra& algebra() const noexcept { return algebra_; }
  const Field& field() const noexcept { return algebra_.field(); }
  const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
  std::size_t dim() const noexcept { return coeffs_.size(); }

  /// Coefficients and algebra under the nontrivial automorphism of k.
  HermitianForm conjugate() const;
  HermitianForm scaled(const FieldElement& lambda) const;

  friend bool operator==(const HermitianForm&, const HermitianForm&) = default;

 private:
  QuaternionAlgebra algebra_;
  std::vector<FieldElement> coeffs_;
};

/// <a_1, ..., a_n> as a quadratic form over k.
QuadraticForm restriction_form(const HermitianForm& h);

/// phi_D tensor q: each a_i contributes (a_i, -a a_i, -b a_i, ab a_i).
QuadraticForm trace_form(const HermitianForm& h);

/// (4m, 1, (a,b)_v^m (-1,-1)_v^m) at a finite place, without looking at any
/// coefficients.
LocalQuadInvariants trace_invariants_closed(std::size_t m, const QuaternionAlgebra& D, const Place& v);

/// Isometry over D, decided on trace forms. Throws AlgebraMismatch when the
/// algebras are not isomorphic.
bool hermitian_isometric(const HermitianForm& h1, const HermitianForm& h2);

/// Signature at a real place where D ramifies; NotRamifiedAtPlace otherwise.
Signature signature_at_ramified(const HermitianForm& h, const Place& v);

bool hermitian_isotropic_global(const HermitianForm& h);

}  // namespace qhyp
