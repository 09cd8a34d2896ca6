#include "qhyp/quaternion_algebra.hpp"

#include "qhyp/local_symbols.hpp"

namespace qhyp {

namespace {

FieldElement in_field(const FieldElement& x, const Field& k, const char* name) {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, std::string("quaternion algebra entry ") + name + " is zero");
  if (!x.is_rational() && !(x.field() == k)) {
    throw Error(ErrorCode::FieldMismatch, std::string("entry ") + name + " is not in " + k.to_string());
  }
  return FieldElement(x.a0(), x.a1(), k);
}

}  // namespace

QuaternionAlgebra::QuaternionAlgebra(Field field, FieldElement a, FieldElement b)
    : field_(field), a_(in_field(a, field, "a")), b_(in_field(b, field, "b")) {}

QuaternionAlgebra QuaternionAlgebra::conjugate() const {
  return QuaternionAlgebra(field_, a_.conjugate(), b_.conjugate());
}

QuadraticForm norm_form(const QuaternionAlgebra& D) {
  return QuadraticForm(D.field(), {FieldElement(1), -D.a(), -D.b(), D.a() * D.b()});
}

std::vector<Place> ramification_set(const QuaternionAlgebra& D) {
  std::vector<Place> out;
  for (const Place& v : symbol_support(D.a(), D.b())) {
    if (hilbert_symbol(D.a(), D.b(), v) == -1) out.push_back(v);
  }
  return out;
}

bool is_division(const QuaternionAlgebra& D) { return !ramification_set(D).empty(); }

bool algebras_isomorphic(const QuaternionAlgebra& D1, const QuaternionAlgebra& D2) {
  if (!(D1.field() == D2.field())) throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
  return ramification_set(D1) == ramification_set(D2);
}

bool subfield_embeds(const QuaternionAlgebra& D, const FieldElement& c) {
  if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "c must be nonzero");
  const FieldElement ck = in_field(c, D.field(), "c");
  if (is_square(ck)) throw Error(ErrorCode::SquareElement, ck.to_string() + " is a square in " + D.field().to_string());
  // A quadratic extension L/k embeds in D iff L splits D, iff L_w is a field
  // (c not a local square) at every place where D ramifies.
  for (const Place& v : ramification_set(D)) {
    if (is_local_square(ck, v)) return false;
  }
  return true;
}

}  // namespace qhyp
