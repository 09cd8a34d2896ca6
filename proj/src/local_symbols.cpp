#include "qhyp/local_symbols.hpp"

#include <algorithm>
#include <set>

namespace qhyp {

namespace {

Field common_field(const FieldElement& a, const FieldElement& b) {
  return (a * b).field();
}

SymbolValue real_symbol(const FieldElement& a, const FieldElement& b, const Place& v) {
  return sign_at_real_place(a, v) < 0 && sign_at_real_place(b, v) < 0 ? -1 : 1;
}

// Tame symbol: the residue character of (-1)^{alpha beta} a^beta / b^alpha.
SymbolValue odd_symbol(const FieldElement& a, const FieldElement& b, const Place& v) {
  const long alpha = valuation(a, v);
  const long beta = valuation(b, v);
  FieldElement t = a.pow(beta) * b.pow(-alpha);
  if ((alpha * beta) % 2 != 0) t = -t;
  return residue_character(t, v);
}

// Serre's formula over Q_2: (-1)^{eps(u)eps(w) + alpha omega(w) + beta omega(u)}.
SymbolValue rational_dyadic_symbol(const Rational& a, const Rational& b) {
  const long alpha = padic_valuation(a, 2);
  const long beta = padic_valuation(b, 2);
  auto unit_mod8 = [](const Rational& x, long e) {
    Rational u = x;
    Integer two_e;
    mpz_ui_pow_ui(two_e.get_mpz_t(), 2, static_cast<unsigned long>(std::labs(e)));
    if (e > 0) u /= Rational(two_e);
    if (e < 0) u *= Rational(two_e);
    Integer inv;
    Integer eight(8);
    Integer den = u.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), eight.get_mpz_t());
    Integer r = (u.get_num() * inv) % 8;
    if (r < 0) r += 8;
    return r.get_si();
  };
  const long u = unit_mod8(a, alpha);
  const long w = unit_mod8(b, beta);
  auto eps = [](long x) { return ((x - 1) / 2) % 2; };
  auto omega = [](long x) { return ((x * x - 1) / 8) % 2; };
  const long e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
  return e % 2 == 0 ? 1 : -1;
}

SymbolValue symbol_at(const FieldElement& a, const FieldElement& b, const Place& v);

SymbolValue dyadic_by_reciprocity(const FieldElement& a, const FieldElement& b, const Place& v) {
  SymbolValue prod = 1;
  for (const Place& w : symbol_support(a, b)) {
    if (w == v) continue;
    prod *= symbol_at(a, b, w);
  }
  return prod;
}

SymbolValue symbol_at(const FieldElement& a, const FieldElement& b, const Place& v) {
  if (v.is_real()) return real_symbol(a, b, v);
  if (v.p != 2) return odd_symbol(a, b, v);
  switch (v.position) {
    case PrimePosition::Rational: return rational_dyadic_symbol(a.a0(), b.a0());
    case PrimePosition::Inert:
    case PrimePosition::Ramified: return dyadic_by_reciprocity(a, b, v);
    default:
      throw Error(ErrorCode::UnsupportedDyadic,
                  "Hilbert symbol at a split dyadic place of " + common_field(a, b).to_string());
  }
}

void add_prime_places(long p, const Field& k, std::set<Place>& out) {
  for (const Place& v : places_over(p, k)) out.insert(v);
}

void add_norm_primes(const FieldElement& x, const Field& k, std::set<Place>& out) {
  const Rational n = x.norm();
  for (const Integer& q : prime_divisors(n.get_num())) {
    if (!q.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "prime " + q.get_str() + " too large");
    add_prime_places(q.get_si(), k, out);
  }
  for (const Integer& q : prime_divisors(n.get_den())) {
    if (!q.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "prime " + q.get_str() + " too large");
    add_prime_places(q.get_si(), k, out);
  }
}

std::set<Place> base_support(const Field& k) {
  std::set<Place> out;
  for (const Place& v : real_places(k)) out.insert(v);
  add_prime_places(2, k, out);
  for (const Integer& q : prime_divisors(Integer(k.discriminant()))) add_prime_places(q.get_si(), k, out);
  return out;
}

}  // namespace

SymbolValue hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidArgument, "Hilbert symbol needs nonzero entries");
  const Field k = common_field(a, b);
  check_place(v, k);
  FieldElement ak(a.a0(), a.a1(), k);
  FieldElement bk(b.a0(), b.a1(), k);
  return symbol_at(ak, bk, v);
}

std::vector<Place> symbol_support(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::InvalidArgument, "symbol support needs nonzero entries");
  const Field k = common_field(a, b);
  std::set<Place> out = base_support(k);
  add_norm_primes(a, k, out);
  add_norm_primes(b, k, out);
  return {out.begin(), out.end()};
}

std::vector<Place> coefficient_support(const Field& k, const std::vector<FieldElement>& coeffs) {
  std::set<Place> out = base_support(k);
  for (const auto& c : coeffs) {
    if (c.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero coefficient");
    add_norm_primes(c, k, out);
  }
  return {out.begin(), out.end()};
}

bool product_formula_check(const FieldElement& a, const FieldElement& b) {
  SymbolValue prod = 1;
  for (const Place& v : symbol_support(a, b)) prod *= hilbert_symbol(a, b, v);
  return prod == 1;
}

}  // namespace qhyp
