#include "qhyp/subspaces.hpp"

#include <algorithm>
#include <set>

#include "qhyp/local_symbols.hpp"

namespace qhyp {

namespace {

bool isotropic_at_real(const HermitianForm& h, const Place& v) {
  if (hilbert_symbol(h.algebra().a(), h.algebra().b(), v) == 1) return true;
  const auto [pos, neg] = signature_at(restriction_form(h), v);
  return pos > 0 && neg > 0;
}

// Signature (dim-1, 1) at v0 and (dim, 0) at every other real place.
void require_standard_signature(const std::vector<FieldElement>& coeffs, const Field& k, const Place& v0) {
  const QuadraticForm q(k, coeffs);
  const int n = static_cast<int>(q.dim());
  for (const Place& v : real_places(k)) {
    const Signature expected = v == v0 ? Signature{n - 1, 1} : Signature{n, 0};
    const Signature s = signature_at(q, v);
    if (s != expected) {
      throw Error(ErrorCode::SignaturePrecondition,
                  "signature at " + v.to_string() + " is (" + std::to_string(s.first) + "," + std::to_string(s.second) +
                      "), expected (" + std::to_string(expected.first) + "," + std::to_string(expected.second) + ")");
    }
  }
}

EmbeddingVerdict verify_against(const HermitianForm& extension, const HermitianForm& ambient) {
  EmbeddingVerdict out;
  out.embeds = hermitian_isometric(extension, ambient);
  out.witness = extension;
  if (!out.embeds) out.failed_condition = "extension is not isometric to the ambient form";
  return out;
}

}  // namespace

SubformSubspace subform(const HermitianForm& h, const std::vector<std::size_t>& indices) {
  const std::set<std::size_t> unique(indices.begin(), indices.end());
  if (unique.size() != indices.size()) throw Error(ErrorCode::InvalidArgument, "repeated subform index");
  if (unique.empty() || unique.size() >= h.dim()) {
    throw Error(ErrorCode::InvalidArgument, "subform needs a nonempty proper index set");
  }
  std::vector<FieldElement> cs;
  for (std::size_t i : indices) {
    if (i >= h.dim()) throw Error(ErrorCode::InvalidArgument, "subform index " + std::to_string(i) + " out of range");
    cs.push_back(h.coefficients()[i]);
  }
  SubformSubspace out{HermitianForm(h.algebra(), std::move(cs)), false};
  if (out.form.dim() >= 2) {
    for (const Place& v : real_places(h.field())) {
      if (isotropic_at_real(out.form, v)) out.finite_volume_nonflat = true;
    }
  }
  return out;
}

QuadraticForm restriction_real(const HermitianForm& h) { return restriction_form(h); }

ComplexRestrictionData restriction_complex(const HermitianForm& h, const FieldElement& c) {
  if (!subfield_embeds(h.algebra(), c)) {
    throw Error(ErrorCode::SubfieldDoesNotEmbed, "k(sqrt(" + c.to_string() + ")) is not a maximal subfield of D");
  }
  return ComplexRestrictionData{h.field(), FieldElement(c.a0(), c.a1(), h.field()), h.coefficients()};
}

HermitianForm extend_real(const QuadraticForm& q, const QuaternionAlgebra& D) {
  if (!(q.field() == D.field())) throw Error(ErrorCode::FieldMismatch, "form and algebra over different fields");
  return HermitianForm(D, q.coefficients());
}

HermitianForm extend_complex(const ComplexRestrictionData& data, const QuaternionAlgebra& D) {
  if (!(data.field == D.field())) throw Error(ErrorCode::FieldMismatch, "data and algebra over different fields");
  if (!subfield_embeds(D, data.c)) {
    throw Error(ErrorCode::SubfieldDoesNotEmbed, "k(sqrt(" + data.c.to_string() + ")) is not a maximal subfield of D");
  }
  // With D = K + K mu, h'(a + b mu, c + d mu) = (h*(a,c) - h*(b,d) mu^2) +
  // (h*(a,d) - conj(h*(b,c))) mu. On an orthogonal basis e_i of W* the
  // vectors e_i stay orthogonal in W* + W* mu with h'(e_i, e_i) = h*(e_i, e_i),
  // so the diagonal is reused unchanged.
  HermitianForm h(D, data.coefficients);
  for (const Place& v : real_places(D.field())) {
    if (signature_at(restriction_form(h), v) != signature_at(QuadraticForm(data.field, data.coefficients), v)) {
      throw Error(ErrorCode::InvalidArgument, "extension changed the signature at " + v.to_string());
    }
  }
  return h;
}

EmbeddingVerdict embeds_real(const QuadraticForm& q, const OrbifoldClassDescriptor& ambient) {
  const AdmissibleTriple t = triple_of(ambient);
  if (!(q.field() == t.field)) throw Error(ErrorCode::FieldMismatch, "subspace and ambient over different fields");
  const std::size_t n = ambient.n();
  if (q.dim() < 2 || q.dim() > n) {
    throw Error(ErrorCode::SignaturePrecondition,
                "real subspace dimension " + std::to_string(q.dim()) + " outside [2, " + std::to_string(n) + "]");
  }
  require_standard_signature(q.coefficients(), q.field(), t.v0);
  std::vector<FieldElement> padded = q.coefficients();
  padded.resize(n, FieldElement(1));
  return verify_against(extend_real(QuadraticForm(q.field(), padded), t.algebra), ambient.form());
}

EmbeddingVerdict embeds_complex(const ComplexRestrictionData& data, const OrbifoldClassDescriptor& ambient) {
  const AdmissibleTriple t = triple_of(ambient);
  if (!(data.field == t.field)) throw Error(ErrorCode::FieldMismatch, "subspace and ambient over different fields");
  if (data.coefficients.size() != ambient.n()) {
    throw Error(ErrorCode::DimensionMismatch, "complex data has dimension " + std::to_string(data.coefficients.size()) +
                                                  ", ambient has " + std::to_string(ambient.n()));
  }
  require_standard_signature(data.coefficients, data.field, t.v0);
  if (!subfield_embeds(t.algebra, data.c)) {
    return EmbeddingVerdict{false, std::nullopt, "K not in Max(D)"};
  }
  return verify_against(extend_complex(data, t.algebra), ambient.form());
}

QuadraticForm surface_witness(const AdmissibleTriple& t) {
  if (!is_admissible(t)) throw Error(ErrorCode::InvalidArgument, "triple is not admissible");
  constexpr long kBound = 100;
  const Field& k = t.field;
  std::vector<FieldElement> ladder = {FieldElement(-1), FieldElement(1)};
  if (!k.is_rational()) {
    const FieldElement r = FieldElement::sqrt_d(k);
    ladder.push_back(-r);
    ladder.push_back(r);
  }
  for (long i = 2; i <= kBound; ++i) {
    ladder.emplace_back(-i);
    ladder.emplace_back(i);
  }
  if (!k.is_rational()) {
    const FieldElement r = FieldElement::sqrt_d(k);
    for (long i = 1; i <= kBound; ++i) {
      for (const FieldElement& x : {FieldElement(i) + r, FieldElement(i) - r}) {
        ladder.push_back(-x);
        ladder.push_back(x);
      }
    }
  }

  const OrbifoldClassDescriptor ambient = OrbifoldClassDescriptor::nonsplit(canonical_hermitian(t, 2));
  for (const FieldElement& lambda : ladder) {
    const QuadraticForm q(k, {FieldElement(1), FieldElement(1), lambda});
    bool signature_ok = true;
    for (const Place& v : real_places(k)) {
      const Signature expected = v == t.v0 ? Signature{2, 1} : Signature{3, 0};
      if (signature_at(q, v) != expected) signature_ok = false;
    }
    if (!signature_ok || isotropic_global(q)) continue;
    if (embeds_real(q, ambient).embeds) return q;
  }
  throw Error(ErrorCode::SearchExhausted, "no surface witness within the search bound");
}

}  // namespace qhyp
