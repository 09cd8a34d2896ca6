#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhyp/commensurability.hpp"

namespace qhyp {

/// Hermitian data over K = k(sqrt(c)) restricted from a form over D: the
/// diagonal k-coefficients together with c.
struct ComplexRestrictionData {
  Field field;
  FieldElement c;
  std::vector<FieldElement> coefficients;

  friend bool operator==(const ComplexRestrictionData&, const ComplexRestrictionData&) = default;
};

struct EmbeddingVerdict {
  bool embeds = false;
  /// Extension of the subspace data to D; isometric to the ambient form
  /// whenever embeds is true.
  std::optional<HermitianForm> witness;
  std::optional<std::string> failed_condition;
};

/// A subform subspace. Field and algebra of definition are those of the
/// ambient form.
struct SubformSubspace {
  HermitianForm form;
  /// dim >= 2 and isotropic at some real place.
  bool finite_volume_nonflat = false;
};

/// Throws InvalidArgument for an empty, full, repeated or out-of-range index
/// set.
SubformSubspace subform(const HermitianForm& h, const std::vector<std::size_t>& indices);

QuadraticForm restriction_real(const HermitianForm& h);

/// Throws SubfieldDoesNotEmbed unless k(sqrt(c)) is a maximal subfield of D.
ComplexRestrictionData restriction_complex(const HermitianForm& h, const FieldElement& c);

/// q tensor_k D. Throws FieldMismatch.
HermitianForm extend_real(const QuadraticForm& q, const QuaternionAlgebra& D);

/// Extension of Hermitian data over K/k to D = K + K mu. Throws
/// SubfieldDoesNotEmbed.
HermitianForm extend_complex(const ComplexRestrictionData& data, const QuaternionAlgebra& D);

/// Standard arithmetic real hyperbolic data q (signature (d,1) at v0, definite
/// elsewhere) against a quaternionic hyperbolic ambient class. q is padded
/// with +1 up to the ambient dimension. Throws SignaturePrecondition.
EmbeddingVerdict embeds_real(const QuadraticForm& q, const OrbifoldClassDescriptor& ambient);

/// Complex hyperbolic data of the ambient dimension against the ambient
/// class. Throws DimensionMismatch or SignaturePrecondition.
EmbeddingVerdict embeds_complex(const ComplexRestrictionData& data, const OrbifoldClassDescriptor& ambient);

/// Ternary form <1, 1, lambda> of signature (2,1) at v0 and (3,0) at the other
/// real places, globally anisotropic, that embeds in the canonical m = 2
/// ambient of t. lambda runs over +-1, +-sqrt(d), +-2..+-100, then
/// +-(r +- sqrt(d)) for r = 1..100. Throws SearchExhausted.
QuadraticForm surface_witness(const AdmissibleTriple& t);

}  // namespace qhyp
