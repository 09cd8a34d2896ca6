#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhyp/hermitian_form.hpp"

namespace qhyp {

/// (k, v0, D): v0 a real place of k.
struct AdmissibleTriple {
  Field field;
  Place v0;
  QuaternionAlgebra algebra;

  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

/// Commensurability class of a locally symmetric orbifold of type C_n, given
/// by its defining data: the field and n for the split type, a Hermitian form
/// over a division algebra for the nonsplit type.
class OrbifoldClassDescriptor {
 public:
  struct Split {
    Field field;
    std::size_t n;
    friend bool operator==(const Split&, const Split&) = default;
  };
  struct Nonsplit {
    HermitianForm form;
    friend bool operator==(const Nonsplit&, const Nonsplit&) = default;
  };

  static OrbifoldClassDescriptor split(Field field, std::size_t n);
  /// Throws InvalidArgument unless the form's algebra is a division algebra.
  static OrbifoldClassDescriptor nonsplit(HermitianForm form);

  bool is_split() const noexcept { return std::holds_alternative<Split>(data_); }
  const Split& split_data() const { return std::get<Split>(data_); }
  const HermitianForm& form() const { return std::get<Nonsplit>(data_).form; }
  const Field& field() const;
  /// n: the split rank parameter, or dim h.
  std::size_t n() const;

  friend bool operator==(const OrbifoldClassDescriptor&, const OrbifoldClassDescriptor&) = default;

 private:
  explicit OrbifoldClassDescriptor(std::variant<Split, Nonsplit> d) : data_(std::move(d)) {}
  std::variant<Split, Nonsplit> data_;
};

/// A decision with the first reason it went the way it did.
struct Verdict {
  bool value = false;
  std::string reason;
};

/// k totally real and D ramified at every real place of k.
bool is_admissible(const AdmissibleTriple& t);

/// Equivalence under a field isomorphism carrying v0' to v0 and D' to D.
Verdict compare_triples(const AdmissibleTriple& t1, const AdmissibleTriple& t2);
bool triples_equivalent(const AdmissibleTriple& t1, const AdmissibleTriple& t2);

/// <1, ..., 1, lambda> of dimension m+1 with lambda negative exactly at v0.
HermitianForm canonical_hermitian(const AdmissibleTriple& t, std::size_t m);

/// The triple of a quaternionic hyperbolic class. Throws
/// NotQuaternionicHyperbolic naming the first failed condition.
AdmissibleTriple triple_of(const OrbifoldClassDescriptor& desc);

/// Commensurability of quaternionic hyperbolic classes through their triples.
/// Throws DimensionMismatch when the dimensions differ.
Verdict compare_quaternionic(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2);
bool quaternionic_commensurable(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2);

/// Commensurability for type C_n, n >= 3, split or nonsplit. Throws
/// UnsupportedRank for n < 3.
Verdict compare_general_cn(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2);
bool general_cn_commensurable(const OrbifoldClassDescriptor& d1, const OrbifoldClassDescriptor& d2);

/// Compact exactly when the field of definition is not Q.
bool is_compact(const AdmissibleTriple& t);

/// Signature pair with the larger entry first, so h and -h agree.
Signature unordered_signature(Signature s);

}  // namespace qhyp
