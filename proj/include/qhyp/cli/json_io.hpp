#pragma once

#include "json.hpp"
#include <stdexcept>
#include <string>

#include "qhyp/subspaces.hpp"

namespace qhyp::cli {

using nlohmann::json;

/// Malformed descriptor. pointer is the JSON pointer of the offending field.
class InputError : public std::runtime_error {
 public:
  InputError(std::string pointer, const std::string& message)
      : std::runtime_error(message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// "p/q" or an integer. Throws InputError.
Rational parse_rational(const json& j, const std::string& ptr);

Field parse_field(const json& j, const std::string& ptr);
/// {"a0":"p/q","a1":"p/q"}; a bare number or "p/q" string is read as a0.
FieldElement parse_element(const json& j, const Field& k, const std::string& ptr);
/// "inf0", "inf1", "p", or "pa"/"pb" for the two places over a split p.
Place parse_place(const std::string& s, const Field& k);
/// {"a","b"} with an optional "field"; otherwise the context field is used.
QuaternionAlgebra parse_algebra(const json& j, const std::optional<Field>& context, const std::string& ptr);
QuadraticForm parse_quadratic_form(const json& j, const std::string& ptr);
HermitianForm parse_hermitian_form(const json& j, const std::string& ptr);
AdmissibleTriple parse_triple(const json& j, const std::string& ptr);
/// {"kind":"nonsplit","form":...,"m":int} or {"kind":"split","field":...,"n":int}.
OrbifoldClassDescriptor parse_ambient(const json& j, const std::string& ptr);
/// {"coeffs":[...]} with optional "field"; c is supplied separately.
ComplexRestrictionData parse_complex_data(const json& j, const FieldElement& c, const Field& context,
                                          const std::string& ptr);

json to_json(const Field& k);
json to_json(const FieldElement& x);
json to_json(const Place& v);
json to_json(const QuaternionAlgebra& D);
json to_json(const QuadraticForm& q);
json to_json(const HermitianForm& h);
json to_json(const AdmissibleTriple& t);
json to_json(const OrbifoldClassDescriptor& d);
json to_json(const LocalQuadInvariants& inv);
json to_json(const EmbeddingVerdict& v);

}  // namespace qhyp::cli
