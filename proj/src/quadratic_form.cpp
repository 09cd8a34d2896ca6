#include "qhyp/quadratic_form.hpp"

#include <algorithm>
#include <set>

namespace qhyp {

QuadraticForm::QuadraticForm(Field field, std::vector<FieldElement> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) {
    if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "quadratic form coefficients must be nonzero");
    if (!c.is_rational() && !(c.field() == field_)) {
      throw Error(ErrorCode::FieldMismatch, "coefficient " + c.to_string() + " is not in " + field_.to_string());
    }
    c = FieldElement(c.a0(), c.a1(), field_);
  }
}

FieldElement QuadraticForm::det() const {
  FieldElement out(Rational(1), Rational(0), field_);
  for (const auto& c : coeffs_) out *= c;
  return out;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm& other) const {
  if (!(field_ == other.field_)) throw Error(ErrorCode::FieldMismatch, "orthogonal sum over different fields");
  std::vector<FieldElement> cs = coeffs_;
  cs.insert(cs.end(), other.coeffs_.begin(), other.coeffs_.end());
  return QuadraticForm(field_, std::move(cs));
}

QuadraticForm QuadraticForm::scaled(const FieldElement& lambda) const {
  std::vector<FieldElement> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c * lambda);
  return QuadraticForm(field_, std::move(cs));
}

bool operator==(const LocalQuadInvariants& x, const LocalQuadInvariants& y) {
  if (!(x.place == y.place)) throw Error(ErrorCode::InvalidArgument, "comparing invariants at different places");
  if (x.dim != y.dim || x.hasse != y.hasse || x.signature != y.signature) return false;
  if (x.dim == 0) return true;
  return is_local_square(x.det / y.det, x.place);
}

Signature signature_at(const QuadraticForm& q, const Place& v) {
  if (!v.is_real()) throw Error(ErrorCode::NotARealPlace, v.to_string() + " is not a real place");
  check_place(v, q.field());
  Signature s{0, 0};
  for (const auto& c : q.coefficients()) {
    if (sign_at_real_place(c, v) > 0) ++s.first;
    else ++s.second;
  }
  return s;
}

LocalQuadInvariants local_invariants(const QuadraticForm& q, const Place& v) {
  check_place(v, q.field());
  LocalQuadInvariants inv;
  inv.place = v;
  inv.dim = q.dim();
  inv.det = q.dim() == 0 ? FieldElement(Rational(1), Rational(0), q.field()) : square_class_representative(q.det());
  const auto& a = q.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) inv.hasse *= hilbert_symbol(a[i], a[j], v);
  }
  if (v.is_real()) inv.signature = signature_at(q, v);
  return inv;
}

std::vector<Place> form_support(const QuadraticForm& q) {
  return coefficient_support(q.field(), q.coefficients());
}

bool forms_isometric(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (!(q1.field() == q2.field())) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
  if (q1.dim() != q2.dim()) return false;
  if (q1.dim() == 0) return true;
  if (!is_square(q1.det() / q2.det())) return false;
  std::set<Place> places;
  for (const auto& v : form_support(q1)) places.insert(v);
  for (const auto& v : form_support(q2)) places.insert(v);
  for (const auto& v : places) {
    if (!(local_invariants(q1, v) == local_invariants(q2, v))) return false;
  }
  return true;
}

bool isotropic_at(const QuadraticForm& q, const Place& v) {
  check_place(v, q.field());
  if (v.is_real()) {
    const auto [pos, neg] = signature_at(q, v);
    return pos > 0 && neg > 0;
  }
  const std::size_t n = q.dim();
  if (n <= 1) return false;
  if (n >= 5) return true;
  const FieldElement d = q.det();
  if (n == 2) return is_local_square(-d, v);
  const auto inv = local_invariants(q, v);
  const FieldElement minus_one(Rational(-1), Rational(0), q.field());
  if (n == 3) return inv.hasse == hilbert_symbol(minus_one, -d, v);
  if (!is_local_square(d, v)) return true;
  return inv.hasse == hilbert_symbol(minus_one, minus_one, v);
}

bool isotropic_global(const QuadraticForm& q) {
  const std::size_t n = q.dim();
  if (n <= 1) return false;
  // Binary forms: <a, b> is isotropic iff -ab is a square. Local isotropy at
  // the support places alone does not decide this (-ab may be a nonsquare
  // unit at a place outside the support), so use the exact global test.
  if (n == 2) return is_square(-q.det());
  // In dimension >= 3 a unit diagonal form at an odd unramified place is
  // isotropic (Chevalley over the residue field, then Hensel), so only the
  // support places can obstruct.
  for (const auto& v : form_support(q)) {
    if (!isotropic_at(q, v)) return false;
  }
  return true;
}

}  // namespace qhyp
