#include "qhyp/commensurability.hpp"

#include <algorithm>

#include "qhyp/local_symbols.hpp"

namespace qhyp {

OrbifoldClassDescriptor OrbifoldClassDescriptor::split(Field field, std::size_t n) {
  return OrbifoldClassDescriptor(Split{field, n});
}

OrbifoldClassDescriptor OrbifoldClassDescriptor::nonsplit(HermitianForm form) {
  if (!is_division(form.algebra())) {
    throw Error(ErrorCode::InvalidArgument, "nonsplit descriptor requires a division algebra");
  }
  return OrbifoldClassDescriptor(Nonsplit{std::move(form)});
}

const Field& OrbifoldClassDescriptor::field() const {
  return is_split() ? split_data().field : form().field();
}

std::size_t OrbifoldClassDescriptor::n() const { return is_split() ? split_data().n : form().dim(); }

Signature unordered_signature(Signature s) {
  if (s.first < s.second) std::swap(s.first, s.second);
  return s;
}

namespace {

bool ramified_at(const QuaternionAlgebra& D, const Place& v) {
  return hilbert_symbol(D.a(), D.b(), v) == -1;
}

// Field automorphisms: identity, and conjugation for quadratic fields.
std::vector<bool> automorphisms(const Field& k) {
  if (k.is_rational()) return {false};
  return {false, true};
}

}  // namespace

bool is_admissible(const AdmissibleTriple& t) {
  if (!t.v0.is_real()) return false;
  if (!(t.algebra.field() == t.field)) return false;
  // Q and real quadratic fields are totally real.
  for (const Place& v : real_places(t.field)) {
    if (!ramified_at(t.algebra, v)) return false;
  }
  return t.v0.embedding < t.field.degree();
}

Verdict compare_triples(const AdmissibleTriple& t1, const AdmissibleTriple& t2) {
  if (!(t1.field == t2.field)) return {false, "fields differ"};
  bool place_ok = false;
  for (bool conj : automorphisms(t1.field)) {
    const Place carried = conj ? t2.v0.conjugate() : t2.v0;
    if (!(carried == t1.v0)) continue;
    place_ok = true;
    const QuaternionAlgebra D2 = conj ? t2.algebra.conjugate() : t2.algebra;
    if (algebras_isomorphic(t1.algebra, D2)) return {true, "equivalent triples"};
  }
  if (!place_ok) return {false, "distinguished places differ"};
  return {false, "ramification sets differ"};
}

bool triples_equivalent(const AdmissibleTriple& t1, const AdmissibleTriple& t2) {
  return compare_triples(t1, t2).value;
}

HermitianForm canonical_hermitian(const AdmissibleTriple& t, std::size_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "canonical form needs m >= 2");
  if (!is_admissible(t)) throw Error(ErrorCode::InvalidArgument, "triple is not admissible");
  FieldElement lambda(-1);
  if (!t.field.is_rational()) {
    lambda = FieldElement::sqrt_d(t.field);
    if (t.v0.embedding == 0) lambda = -lambda;
  }
  std::vector<FieldElement> cs(m, FieldElement(1));
  cs.push_back(lambda);
  HermitianForm h(t.algebra, std::move(cs));
  for (const Place& v : real_places(t.field)) {
    const Signature expected = v == t.v0 ? Signature{int(m), 1} : Signature{int(m) + 1, 0};
    if (signature_at_ramified(h, v) != expected) {
      throw Error(ErrorCode::InvalidArgument, "canonical form signature check failed at " + v.to_string());
    }
  }
  return h;
}

AdmissibleTriple triple_of(const OrbifoldClassDescriptor& desc) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::NotQuaternionicHyperbolic, why); };
  if (desc.is_split()) fail("split-type descriptor has no algebra of definition");
  const HermitianForm& h = desc.form();
  const Field& k = h.field();
  const int n = static_cast<int>(h.dim());
  // Condition (1), k totally real, holds for every supported field.
  for (const Place& v : real_places(k)) {
    if (!ramified_at(h.algebra(), v)) fail("condition 2: D does not ramify at real place " + v.to_string());
  }
  std::vector<Place> isotropic;
  for (const Place& v : real_places(k)) {
    const auto [pos, neg] = signature_at_ramified(h, v);
    if (pos > 0 && neg > 0) isotropic.push_back(v);
  }
  if (isotropic.size() != 1) {
    fail("condition 3: h is isotropic at " + std::to_string(isotropic.size()) + " real places, expected exactly one");
  }
  const Place v0 = isotropic.front();
  const Signature s = signature_at_ramified(h, v0);
  if (s != Signature{n - 1, 1}) {
    fail("condition 4: signature at " + v0.to_string() + " is (" + std::to_string(s.first) + "," +
         std::to_string(s.second) + "), expected (" + std::to_string(n - 1) + ",1)");
  }
  return AdmissibleTriple{k, v0, h.algebra()};
}

Verdict compare_quaternionic(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2) {
  const AdmissibleTriple t1 = triple_of(d1);
  const AdmissibleTriple t2 = triple_of(d2);
  if (d1.n() != d2.n()) {
    throw Error(ErrorCode::DimensionMismatch, "quaternionic dimensions differ: m = " + std::to_string(d1.n() - 1) +
                                                  " vs m = " + std::to_string(d2.n() - 1));
  }
  return compare_triples(t1, t2);
}

bool quaternionic_commensurable(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2) {
  return compare_quaternionic(d1, d2).value;
}

Verdict compare_general_cn(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2) {
  if (d1.n() < 3 || d2.n() < 3) throw Error(ErrorCode::UnsupportedRank, "type C_n requires n >= 3");
  if (d1.n() != d2.n()) return {false, "ranks differ"};
  if (d1.is_split() != d2.is_split()) return {false, "split and nonsplit types"};
  if (!(d1.field() == d2.field())) return {false, "fields differ"};
  if (d1.is_split()) return {true, "same field and rank"};

  const HermitianForm& h1 = d1.form();
  bool algebra_ok = false;
  for (bool conj : automorphisms(d1.field())) {
    const HermitianForm h2 = conj ? d2.form().conjugate() : d2.form();
    if (!algebras_isomorphic(h1.algebra(), h2.algebra())) continue;
    algebra_ok = true;
    bool signatures_match = true;
    for (const Place& v : real_places(d1.field())) {
      if (!ramified_at(h1.algebra(), v)) continue;
      if (unordered_signature(signature_at_ramified(h1, v)) != unordered_signature(signature_at_ramified(h2, v))) {
        signatures_match = false;
        break;
      }
    }
    if (signatures_match) return {true, "same field, algebra and real signatures"};
  }
  if (!algebra_ok) return {false, "ramification sets differ"};
  return {false, "real signatures differ"};
}

bool general_cn_commensurable(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2) {
  return compare_general_cn(d1, d2).value;
}

bool is_compact(const AdmissibleTriple& t) { return !t.field.is_rational(); }

}  // namespace qhyp
