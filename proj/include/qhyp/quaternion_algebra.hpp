#pragma once

#include <vector>

#include "qhyp/field.hpp"
#include "qhyp/quadratic_form.hpp"

namespace qhyp {

/// D = (a, b / k) with a, b nonzero.
class QuaternionAlgebra {
 public:
  QuaternionAlgebra(Field field, FieldElement a, FieldElement b);

  const Field& field() const noexcept { return field_; }
  const FieldElement& a() const noexcept { return a_; }
  const FieldElement& b() const noexcept { return b_; }

  /// (tau(a), tau(b)) for the nontrivial automorphism of a quadratic field.
  QuaternionAlgebra conjugate() const;

  friend bool operator==(const QuaternionAlgebra&, const QuaternionAlgebra&) = default;

 private:
  Field field_;
  FieldElement a_;
  FieldElement b_;
};

/// <1, -a, -b, ab>.
QuadraticForm norm_form(const QuaternionAlgebra& D);

/// Places where (a,b)_v = -1, sorted. Always of even size.
std::vector<Place> ramification_set(const QuaternionAlgebra& D);

bool is_division(const QuaternionAlgebra& D);

/// Equal ramification sets. Throws FieldMismatch.
bool algebras_isomorphic(const QuaternionAlgebra& D1, const QuaternionAlgebra& D2);

/// Whether k(sqrt(c)) embeds in D. Throws SquareElement when c is a square
/// in k.
bool subfield_embeds(const QuaternionAlgebra& D, const FieldElement& c);

}  // namespace qhyp
