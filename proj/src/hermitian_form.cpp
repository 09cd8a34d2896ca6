#include "qhyp/hermitian_form.hpp"

#include <algorithm>

#include "qhyp/local_symbols.hpp"

namespace qhyp {

HermitianForm::HermitianForm(QuaternionAlgebra algebra, std::vector<FieldElement> coefficients)
    : algebra_(std::move(algebra)), coeffs_(std::move(coefficients)) {
  // Reuse the quadratic form checks for nonzero entries lying in k.
  coeffs_ = QuadraticForm(algebra_.field(), coeffs_).coefficients();
}

HermitianForm HermitianForm::conjugate() const {
  std::vector<FieldElement> cs;
  for (const auto& c : coeffs_) cs.push_back(c.conjugate());
  return HermitianForm(algebra_.conjugate(), std::move(cs));
}

HermitianForm HermitianForm::scaled(const FieldElement& lambda) const {
  std::vector<FieldElement> cs;
  for (const auto& c : coeffs_) cs.push_back(c * lambda);
  return HermitianForm(algebra_, std::move(cs));
}

QuadraticForm restriction_form(const HermitianForm& h) { return QuadraticForm(h.field(), h.coefficients()); }

QuadraticForm trace_form(const HermitianForm& h) {
  const auto& a = h.algebra().a();
  const auto& b = h.algebra().b();
  std::vector<FieldElement> cs;
  cs.reserve(4 * h.dim());
  for (const auto& c : h.coefficients()) {
    cs.push_back(c);
    cs.push_back(-a * c);
    cs.push_back(-b * c);
    cs.push_back(a * b * c);
  }
  return QuadraticForm(h.field(), std::move(cs));
}

LocalQuadInvariants trace_invariants_closed(std::size_t m, const QuaternionAlgebra& D, const Place& v) {
  if (!v.is_finite()) throw Error(ErrorCode::InvalidArgument, "closed trace invariants are for finite places");
  check_place(v, D.field());
  LocalQuadInvariants inv;
  inv.place = v;
  inv.dim = 4 * m;
  inv.det = FieldElement(Rational(1), Rational(0), D.field());
  if (m % 2 == 1) {
    const FieldElement minus_one(Rational(-1), Rational(0), D.field());
    inv.hasse = hilbert_symbol(D.a(), D.b(), v) * hilbert_symbol(minus_one, minus_one, v);
  }
  return inv;
}

bool hermitian_isometric(const HermitianForm& h1, const HermitianForm& h2) {
  if (!(h1.field() == h2.field())) throw Error(ErrorCode::FieldMismatch, "Hermitian forms over different fields");
  if (!algebras_isomorphic(h1.algebra(), h2.algebra())) {
    throw Error(ErrorCode::AlgebraMismatch, "Hermitian forms over nonisomorphic algebras");
  }
  if (h1.dim() != h2.dim()) return false;
  return forms_isometric(trace_form(h1), trace_form(h2));
}

Signature signature_at_ramified(const HermitianForm& h, const Place& v) {
  if (!v.is_real()) throw Error(ErrorCode::NotARealPlace, v.to_string() + " is not a real place");
  check_place(v, h.field());
  if (hilbert_symbol(h.algebra().a(), h.algebra().b(), v) != -1) {
    throw Error(ErrorCode::NotRamifiedAtPlace, "algebra is split at " + v.to_string());
  }
  return signature_at(restriction_form(h), v);
}

bool hermitian_isotropic_global(const HermitianForm& h) {
  // A one-dimensional form <a> takes the values a*N(x), so it is isotropic
  // exactly when the norm form of D is, i.e. when D is split.
  if (h.dim() == 1) return !is_division(h.algebra());
  return isotropic_global(trace_form(h));
}

}  // namespace qhyp
