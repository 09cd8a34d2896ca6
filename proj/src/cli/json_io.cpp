#include "qhyp/cli/json_io.hpp"

#include <regex>

namespace qhyp::cli {

namespace {

const json& member(const json& j, const char* key, const std::string& ptr) {
  if (!j.is_object()) throw InputError(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(ptr + "/" + key, std::string("missing field \"") + key + "\"");
  return *it;
}

long parse_integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw InputError(ptr, "expected an integer");
  return j.get<long>();
}

std::vector<FieldElement> parse_coeffs(const json& j, const Field& k, const std::string& ptr) {
  const json& cs = member(j, "coeffs", ptr);
  if (!cs.is_array() || cs.empty()) throw InputError(ptr + "/coeffs", "expected a nonempty array");
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string p = ptr + "/coeffs/" + std::to_string(i);
    out.push_back(parse_element(cs[i], k, p));
    if (out.back().is_zero()) throw InputError(p, "coefficient is zero");
  }
  return out;
}

// Library errors raised while building a value are input errors at ptr.
template <class F>
auto guarded(const std::string& ptr, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(ptr, e.what());
  }
}

}  // namespace

Rational parse_rational(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(ptr, "expected a rational string \"p/q\"");
  static const std::regex kRational(R"(\s*[+-]?\d+(/\d+)?\s*)");
  const std::string s = j.get<std::string>();
  if (!std::regex_match(s, kRational)) throw InputError(ptr, "malformed rational \"" + s + "\"");
  std::string t;
  for (char ch : s) {
    if (ch != ' ' && ch != '+') t += ch;
  }
  const auto slash = t.find('/');
  if (slash != std::string::npos && Integer(t.substr(slash + 1)) == 0) throw InputError(ptr, "zero denominator");
  Rational r(t);
  r.canonicalize();
  return r;
}

Field parse_field(const json& j, const std::string& ptr) {
  const json& base = member(j, "base", ptr);
  if (base == "Q") return Field::rationals();
  if (base == "quadratic") {
    const long d = parse_integer(member(j, "d", ptr), ptr + "/d");
    return guarded(ptr + "/d", [&] { return Field::quadratic(d); });
  }
  throw InputError(ptr + "/base", "base must be \"Q\" or \"quadratic\"");
}

FieldElement parse_element(const json& j, const Field& k, const std::string& ptr) {
  if (!j.is_object()) return FieldElement(parse_rational(j, ptr), Rational(0), k);
  const Rational a0 = parse_rational(member(j, "a0", ptr), ptr + "/a0");
  Rational a1(0);
  if (j.contains("a1")) a1 = parse_rational(j["a1"], ptr + "/a1");
  if (k.is_rational() && sgn(a1) != 0) throw InputError(ptr + "/a1", "sqrt(d) coefficient over Q");
  return FieldElement(a0, a1, k);
}

Place parse_place(const std::string& s, const Field& k) {
  static const std::regex kReal(R"(inf([01]))");
  static const std::regex kFinite(R"((\d+)([ab]?))");
  std::smatch m;
  Place v;
  if (std::regex_match(s, m, kReal)) {
    v = Place::real(std::stoi(m[1]));
  } else if (std::regex_match(s, m, kFinite)) {
    const long p = std::stol(m[1]);
    if (!is_prime(p)) throw InputError("", s + " is not a prime");
    const auto over = places_over(p, k);
    if (m[2] == "") {
      if (over.size() != 1) throw InputError("", "split prime " + s + " needs a or b");
      v = over.front();
    } else {
      if (over.size() != 2) throw InputError("", s + ": prime is not split");
      v = over[m[2] == "a" ? 0 : 1];
    }
  } else {
    throw InputError("", "malformed place \"" + s + "\"");
  }
  guarded("", [&] { check_place(v, k); return 0; });
  return v;
}

QuaternionAlgebra parse_algebra(const json& j, const std::optional<Field>& context, const std::string& ptr) {
  Field k;
  if (j.is_object() && j.contains("field")) {
    k = parse_field(j["field"], ptr + "/field");
    if (context && !(*context == k)) throw InputError(ptr + "/field", "algebra field differs from the enclosing field");
  } else if (context) {
    k = *context;
  } else {
    member(j, "field", ptr);
  }
  const FieldElement a = parse_element(member(j, "a", ptr), k, ptr + "/a");
  const FieldElement b = parse_element(member(j, "b", ptr), k, ptr + "/b");
  if (a.is_zero()) throw InputError(ptr + "/a", "a is zero");
  if (b.is_zero()) throw InputError(ptr + "/b", "b is zero");
  return QuaternionAlgebra(k, a, b);
}

QuadraticForm parse_quadratic_form(const json& j, const std::string& ptr) {
  const Field k = parse_field(member(j, "field", ptr), ptr + "/field");
  return QuadraticForm(k, parse_coeffs(j, k, ptr));
}

HermitianForm parse_hermitian_form(const json& j, const std::string& ptr) {
  const Field k = parse_field(member(j, "field", ptr), ptr + "/field");
  const QuaternionAlgebra D = parse_algebra(member(j, "algebra", ptr), k, ptr + "/algebra");
  return HermitianForm(D, parse_coeffs(j, k, ptr));
}

AdmissibleTriple parse_triple(const json& j, const std::string& ptr) {
  const Field k = parse_field(member(j, "field", ptr), ptr + "/field");
  const json& v0 = member(j, "v0", ptr);
  const long e = parse_integer(member(v0, "embedding", ptr + "/v0"), ptr + "/v0/embedding");
  if (e < 0 || e >= k.degree()) throw InputError(ptr + "/v0/embedding", "no such real embedding");
  const QuaternionAlgebra D = parse_algebra(member(j, "algebra", ptr), k, ptr + "/algebra");
  return AdmissibleTriple{k, Place::real(static_cast<int>(e)), D};
}

OrbifoldClassDescriptor parse_ambient(const json& j, const std::string& ptr) {
  const json& kind = member(j, "kind", ptr);
  if (kind == "split") {
    const Field k = parse_field(member(j, "field", ptr), ptr + "/field");
    const long n = parse_integer(member(j, "n", ptr), ptr + "/n");
    if (n < 1) throw InputError(ptr + "/n", "n must be positive");
    return OrbifoldClassDescriptor::split(k, static_cast<std::size_t>(n));
  }
  if (kind != "nonsplit") throw InputError(ptr + "/kind", "kind must be \"split\" or \"nonsplit\"");
  const HermitianForm h = parse_hermitian_form(member(j, "form", ptr), ptr + "/form");
  if (j.contains("m")) {
    const long m = parse_integer(j["m"], ptr + "/m");
    if (m < 1 || static_cast<std::size_t>(m) + 1 != h.dim()) {
      throw InputError(ptr + "/m", "m must equal the form dimension minus one");
    }
  }
  return guarded(ptr + "/form/algebra", [&] { return OrbifoldClassDescriptor::nonsplit(h); });
}

ComplexRestrictionData parse_complex_data(const json& j, const FieldElement& c, const Field& context,
                                          const std::string& ptr) {
  Field k = context;
  if (j.is_object() && j.contains("field")) {
    k = parse_field(j["field"], ptr + "/field");
    if (!(k == context)) throw InputError(ptr + "/field", "field differs from the ambient field");
  }
  return ComplexRestrictionData{k, FieldElement(c.a0(), c.a1(), k), parse_coeffs(j, k, ptr)};
}

json to_json(const Field& k) {
  if (k.is_rational()) return {{"base", "Q"}};
  return {{"base", "quadratic"}, {"d", k.d()}};
}

json to_json(const FieldElement& x) { return {{"a0", x.a0().get_str()}, {"a1", x.a1().get_str()}}; }

json to_json(const Place& v) { return v.to_string(); }

json to_json(const QuaternionAlgebra& D) {
  return {{"field", to_json(D.field())}, {"a", to_json(D.a())}, {"b", to_json(D.b())}};
}

json to_json(const QuadraticForm& q) {
  json cs = json::array();
  for (const auto& c : q.coefficients()) cs.push_back(to_json(c));
  return {{"field", to_json(q.field())}, {"coeffs", cs}};
}

json to_json(const HermitianForm& h) {
  json cs = json::array();
  for (const auto& c : h.coefficients()) cs.push_back(to_json(c));
  return {{"field", to_json(h.field())}, {"algebra", to_json(h.algebra())}, {"coeffs", cs}};
}

json to_json(const AdmissibleTriple& t) {
  return {{"field", to_json(t.field)}, {"v0", {{"embedding", t.v0.embedding}}}, {"algebra", to_json(t.algebra)}};
}

json to_json(const OrbifoldClassDescriptor& d) {
  if (d.is_split()) return {{"kind", "split"}, {"field", to_json(d.field())}, {"n", d.n()}};
  return {{"kind", "nonsplit"}, {"form", to_json(d.form())}, {"m", d.n() - 1}};
}

json to_json(const LocalQuadInvariants& inv) {
  json out = {{"place", to_json(inv.place)}, {"dim", inv.dim}, {"det", to_json(inv.det)}, {"hasse", inv.hasse}};
  if (inv.signature) out["signature"] = {inv.signature->first, inv.signature->second};
  return out;
}

json to_json(const EmbeddingVerdict& v) {
  json out = {{"embeds", v.embeds}};
  if (v.witness) out["witness"] = to_json(*v.witness);
  if (v.failed_condition) out["failed_condition"] = *v.failed_condition;
  return out;
}

}  // namespace qhyp::cli
