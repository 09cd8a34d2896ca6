#include "qhyp/field.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>

namespace qhyp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::FieldMismatch: return "field-mismatch";
    case ErrorCode::InvalidField: return "invalid-field";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::UnsupportedDyadic: return "unsupported-dyadic-configuration";
    case ErrorCode::NotARealPlace: return "not-a-real-place";
    case ErrorCode::NotRamifiedAtPlace: return "not-ramified-at-place";
    case ErrorCode::SquareElement: return "c-is-a-square";
    case ErrorCode::SubfieldDoesNotEmbed: return "subfield-does-not-embed";
    case ErrorCode::AlgebraMismatch: return "algebra-mismatch";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NotQuaternionicHyperbolic: return "not-quaternionic-hyperbolic";
    case ErrorCode::SignaturePrecondition: return "signature-precondition";
    case ErrorCode::UnsupportedRank: return "unsupported-rank";
    case ErrorCode::NonNegativeVector: return "non-negative-vector";
    case ErrorCode::PointAtInfinity: return "last-entry-zero";
    case ErrorCode::SearchExhausted: return "search-exhausted";
  }
  return "unknown";
}

// Integer helpers -----------------------------------------------------------

bool is_prime(long n) {
  if (n < 2) return false;
  Integer z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        Integer a = abs(diff);
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<Integer>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m == 0) return out;
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  factor_into(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long padic_valuation(const Integer& n, long p) {
  Integer m = n;
  long e = 0;
  while (m != 0 && mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++e;
  }
  return e;
}

long padic_valuation(const Rational& x, long p) {
  return padic_valuation(x.get_num(), p) - padic_valuation(x.get_den(), p);
}

int legendre(const Integer& a, long p) {
  Integer pp(p);
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

Integer squarefree_part(const Integer& n) {
  Integer m = abs(n);
  Integer out = sgn(n) < 0 ? -1 : 1;
  for (const auto& p : prime_divisors(m)) {
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return out;
}

namespace {

Integer rational_to_residue(const Rational& x, const Integer& modulus) {
  Integer inv;
  Integer den = x.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(ErrorCode::InvalidArgument, "denominator not invertible modulo " + modulus.get_str());
  }
  Integer r = (x.get_num() * inv) % modulus;
  if (r < 0) r += modulus;
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Least positive root of x^2 = d (mod p), p odd and d a nonzero residue.
Integer sqrt_mod_p(long d, long p) {
  for (long r = 1; r < p; ++r) {
    if ((r * r - d) % p == 0) return r;
  }
  throw Error(ErrorCode::InvalidArgument, "no square root mod p");
}

// Root of x^2 = d modulo p^k, congruent to r mod p (odd p, p does not divide d).
Integer hensel_sqrt(long d, long p, const Integer& r, long k) {
  Integer s = r;
  Integer pk = p;
  long prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    mpz_pow_ui(pk.get_mpz_t(), Integer(p).get_mpz_t(), static_cast<unsigned long>(prec));
    Integer two_s = 2 * s, inv;
    mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), pk.get_mpz_t());
    s = (s - (s * s - d) * inv) % pk;
    if (s < 0) s += pk;
  }
  return s;
}

// p-adic root of d at a split odd place, as an integer modulo p^k.
Integer split_root(const Field& k, const Place& v, long prec) {
  Integer r = sqrt_mod_p(k.d(), v.p);
  if (v.position == PrimePosition::SplitSecond) r = v.p - r;
  return hensel_sqrt(k.d(), v.p, r, prec);
}

// x = (A + B sqrt(d)) / c with integers A, B and c > 0.
struct IntegralForm {
  Integer A, B, c;
};

IntegralForm integral_form(const FieldElement& x) {
  Integer c;
  mpz_lcm(c.get_mpz_t(), x.a0().get_den_mpz_t(), x.a1().get_den_mpz_t());
  Rational A = x.a0() * c;
  Rational B = x.a1() * c;
  return {A.get_num(), B.get_num(), c};
}

Integer ipow(long p, long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return out;
}

long split_valuation(const FieldElement& x, const Place& v) {
  const long p = v.p;
  auto [A, B, c] = integral_form(x);
  long g = std::min(A == 0 ? LONG_MAX : padic_valuation(A, p), B == 0 ? LONG_MAX : padic_valuation(B, p));
  Integer pg = ipow(p, g);
  A /= pg;
  B /= pg;
  long extra = 0;
  if (B != 0 && !mpz_divisible_ui_p(B.get_mpz_t(), static_cast<unsigned long>(p))) {
    Integer r = sqrt_mod_p(x.field().d(), p);
    if (v.position == PrimePosition::SplitSecond) r = p - r;
    if (mpz_divisible_ui_p(Integer(A + B * r).get_mpz_t(), static_cast<unsigned long>(p))) {
      extra = padic_valuation(Integer(A * A - x.field().d() * B * B), p);
    }
  }
  return g + extra - padic_valuation(c, p);
}

int split_unit_character(const FieldElement& u, const Place& v) {
  const long p = v.p;
  auto [A, B, c] = integral_form(u);
  long e = padic_valuation(c, p);
  Integer mod = ipow(p, e + 1);
  Integer s = split_root(u.field(), v, e + 1);
  Integer num = (A + B * s) % mod;
  if (num < 0) num += mod;
  Integer pe = ipow(p, e);
  Integer top = num / pe;
  Integer cu = c / pe;
  Integer inv;
  Integer pp(p);
  mpz_invert(inv.get_mpz_t(), cu.get_mpz_t(), pp.get_mpz_t());
  return legendre(Integer(top * inv), p);
}

}  // namespace

// Field ----------------------------------------------------------------------

Field Field::quadratic(long d) {
  if (d <= 1) throw Error(ErrorCode::InvalidField, "quadratic field requires d > 1, got " + std::to_string(d));
  if (squarefree_part(Integer(d)) != d) {
    throw Error(ErrorCode::InvalidField, "d must be squarefree, got " + std::to_string(d));
  }
  return Field(d);
}

long Field::discriminant() const noexcept {
  if (is_rational()) return 1;
  return d_ % 4 == 1 ? d_ : 4 * d_;
}

std::string Field::to_string() const {
  return is_rational() ? "Q" : "Q(sqrt(" + std::to_string(d_) + "))";
}

// FieldElement ---------------------------------------------------------------

FieldElement::FieldElement(Rational a0, Rational a1, Field field)
    : a0_(std::move(a0)), a1_(std::move(a1)), field_(field) {
  a0_.canonicalize();
  a1_.canonicalize();
  if (field_.is_rational() && sgn(a1_) != 0) {
    throw Error(ErrorCode::FieldMismatch, "element of Q cannot have a sqrt(d) coefficient");
  }
}

FieldElement FieldElement::sqrt_d(const Field& field) {
  if (field.is_rational()) throw Error(ErrorCode::FieldMismatch, "Q has no sqrt(d)");
  return FieldElement(0, 1, field);
}

Field FieldElement::join(const FieldElement& o) const {
  if (field_ == o.field_ || o.field_.is_rational()) return field_;
  if (field_.is_rational()) return o.field_;
  if (is_rational() && o.is_rational()) return field_;
  throw Error(ErrorCode::FieldMismatch, "elements of " + field_.to_string() + " and " + o.field_.to_string());
}

FieldElement FieldElement::operator-() const { return FieldElement(-a0_, -a1_, field_); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  field_ = join(o);
  a0_ += o.a0_;
  a1_ += o.a1_;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  field_ = join(o);
  a0_ -= o.a0_;
  a1_ -= o.a1_;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  field_ = join(o);
  const long d = field_.d();
  Rational n0 = a0_ * o.a0_ + d * a1_ * o.a1_;
  Rational n1 = a0_ * o.a1_ + a1_ * o.a0_;
  a0_ = n0;
  a1_ = n1;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Rational n = norm();
  return FieldElement(a0_ / n, -a1_ / n, field_);
}

FieldElement FieldElement::conjugate() const { return FieldElement(a0_, -a1_, field_); }

Rational FieldElement::norm() const { return a0_ * a0_ - field_.d() * a1_ * a1_; }

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement out(Rational(1), Rational(0), field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (x.a0_ != y.a0_ || x.a1_ != y.a1_) return false;
  return sgn(x.a1_) == 0 || x.field_ == y.field_;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  if (sgn(a1_) == 0) {
    os << a0_.get_str();
    return os.str();
  }
  const std::string root = "sqrt(" + std::to_string(field_.d()) + ")";
  if (sgn(a0_) != 0) os << a0_.get_str() << (sgn(a1_) > 0 ? "+" : "-");
  else if (sgn(a1_) < 0) os << "-";
  Rational m = abs(a1_);
  if (m != 1) os << m.get_str() << "*";
  os << root;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

// Places ---------------------------------------------------------------------

const char* to_string(Splitting s) noexcept {
  switch (s) {
    case Splitting::Rational: return "rational";
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

const char* to_string(PrimePosition p) noexcept {
  switch (p) {
    case PrimePosition::Rational: return "rational";
    case PrimePosition::SplitFirst: return "split-first";
    case PrimePosition::SplitSecond: return "split-second";
    case PrimePosition::Inert: return "inert";
    case PrimePosition::Ramified: return "ramified";
  }
  return "?";
}

Place Place::conjugate() const {
  Place out = *this;
  if (is_real()) {
    out.embedding = 1 - embedding;
  } else if (position == PrimePosition::SplitFirst) {
    out.position = PrimePosition::SplitSecond;
  } else if (position == PrimePosition::SplitSecond) {
    out.position = PrimePosition::SplitFirst;
  }
  return out;
}

std::string Place::to_string() const {
  if (is_real()) return "inf" + std::to_string(embedding);
  std::string s = std::to_string(p);
  if (position == PrimePosition::SplitFirst) s += "a";
  if (position == PrimePosition::SplitSecond) s += "b";
  return s;
}

std::ostream& operator<<(std::ostream& os, const Place& v) { return os << v.to_string(); }

Splitting split_prime(long p, const Field& k) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  if (k.is_rational()) return Splitting::Rational;
  const long d = k.d();
  if (p == 2) {
    const long r = ((d % 8) + 8) % 8;
    if (r == 1) return Splitting::Split;
    if (r == 5) return Splitting::Inert;
    return Splitting::Ramified;
  }
  if (d % p == 0) return Splitting::Ramified;
  return legendre(Integer(d), p) == 1 ? Splitting::Split : Splitting::Inert;
}

std::vector<Place> real_places(const Field& k) {
  if (k.is_rational()) return {Place::real(0)};
  return {Place::real(0), Place::real(1)};
}

std::vector<Place> places_over(long p, const Field& k) {
  switch (split_prime(p, k)) {
    case Splitting::Rational: return {Place::finite(p)};
    case Splitting::Split:
      return {Place::finite(p, PrimePosition::SplitFirst), Place::finite(p, PrimePosition::SplitSecond)};
    case Splitting::Inert: return {Place::finite(p, PrimePosition::Inert)};
    case Splitting::Ramified: return {Place::finite(p, PrimePosition::Ramified)};
  }
  return {};
}

void check_place(const Place& v, const Field& k) {
  if (v.is_real()) {
    if (v.embedding < 0 || v.embedding >= k.degree()) {
      throw Error(ErrorCode::InvalidArgument, "no real embedding " + std::to_string(v.embedding) + " of " + k.to_string());
    }
    return;
  }
  const auto ps = places_over(v.p, k);
  if (std::find(ps.begin(), ps.end(), v) == ps.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "place " + v.to_string() + " (" + to_string(v.position) + ") is not a place of " + k.to_string());
  }
}

int sign_at_real_place(const FieldElement& x, const Place& v) {
  if (!v.is_real()) throw Error(ErrorCode::NotARealPlace, v.to_string() + " is not a real place");
  const int s0 = sgn(x.a0());
  int s1 = sgn(x.a1());
  if (v.embedding == 1) s1 = -s1;
  if (s1 == 0) return s0;
  if (s0 == 0 || s0 == s1) return s1;
  // Opposite signs: compare a0^2 with a1^2 d.
  Rational lhs = x.a0() * x.a0();
  Rational rhs = x.a1() * x.a1() * x.field().d();
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? s0 : s1;
}

long valuation(const FieldElement& x, const Place& v) {
  if (!v.is_finite()) throw Error(ErrorCode::InvalidArgument, "valuation at a real place");
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  switch (v.position) {
    case PrimePosition::Rational:
      if (!x.is_rational()) throw Error(ErrorCode::FieldMismatch, "irrational element at a place of Q");
      return padic_valuation(x.a0(), v.p);
    case PrimePosition::Inert: return padic_valuation(x.norm(), v.p) / 2;
    case PrimePosition::Ramified: return padic_valuation(x.norm(), v.p);
    case PrimePosition::SplitFirst:
    case PrimePosition::SplitSecond:
      if (v.p == 2) throw Error(ErrorCode::UnsupportedDyadic, "valuation at a split dyadic place");
      return split_valuation(x, v);
  }
  return 0;
}

FieldElement uniformizer(const Field& k, const Place& v) {
  if (v.position == PrimePosition::Ramified) {
    const FieldElement r = FieldElement::sqrt_d(k);
    if (v.p == 2 && k.d() % 4 == 3) return FieldElement(1) + r;
    return r;
  }
  return FieldElement(v.p);
}

int residue_character(const FieldElement& unit, const Place& v) {
  if (!v.is_finite() || v.p == 2) throw Error(ErrorCode::InvalidArgument, "residue character needs an odd finite place");
  const Integer p(v.p);
  switch (v.position) {
    case PrimePosition::Rational: return legendre(rational_to_residue(unit.a0(), p), v.p);
    case PrimePosition::Inert:
      // u is a square in F_{p^2} iff N(u) = u^{p+1} is a square in F_p.
      return legendre(rational_to_residue(unit.norm(), p), v.p);
    case PrimePosition::Ramified:
      // Z_p[sqrt(d)] is the local ring; a unit reduces to a0 mod p.
      return legendre(rational_to_residue(unit.a0(), p), v.p);
    case PrimePosition::SplitFirst:
    case PrimePosition::SplitSecond: return split_unit_character(unit, v);
  }
  return 0;
}

namespace {

bool dyadic_quadratic_square(const FieldElement& x, const Place& v) {
  const Field& k = x.field();
  const long e = valuation(x, v);
  if (e % 2 != 0) return false;
  const FieldElement u = x / uniformizer(k, v).pow(e);
  // Local square theorem: a unit is a square iff it is a square modulo 4*pi.
  // Representatives of O/8O cover O/4piO in both the inert and ramified case.
  const bool inert = v.position == PrimePosition::Inert;
  const long threshold = inert ? 3 : 5;
  const FieldElement r = FieldElement::sqrt_d(k);
  const FieldElement basis = inert ? (FieldElement(1) + r) / FieldElement(2) : r;
  for (long a = 0; a < 8; ++a) {
    for (long b = 0; b < 8; ++b) {
      const FieldElement w = FieldElement(a) + FieldElement(b) * basis;
      const FieldElement diff = u - w * w;
      if (diff.is_zero() || valuation(diff, v) >= threshold) return true;
    }
  }
  return false;
}

}  // namespace

bool is_local_square(const FieldElement& x, const Place& v) {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "is_local_square of zero");
  if (v.is_real()) return sign_at_real_place(x, v) > 0;
  if (v.p == 2) {
    if (v.position == PrimePosition::Rational) {
      if (!x.is_rational()) throw Error(ErrorCode::FieldMismatch, "irrational element at a place of Q");
      const long e = padic_valuation(x.a0(), 2);
      if (e % 2 != 0) return false;
      Rational u = x.a0();
      if (e > 0) u /= Rational(ipow(2, e));
      if (e < 0) u *= Rational(ipow(2, -e));
      return rational_to_residue(u, Integer(8)) == 1;
    }
    if (v.position == PrimePosition::SplitFirst || v.position == PrimePosition::SplitSecond) {
      throw Error(ErrorCode::UnsupportedDyadic, "square test at a split dyadic place of " + x.field().to_string());
    }
    return dyadic_quadratic_square(x, v);
  }
  const long e = valuation(x, v);
  if (e % 2 != 0) return false;
  const FieldElement u = x / uniformizer(x.field(), v).pow(e);
  return residue_character(u, v) == 1;
}

std::optional<FieldElement> square_root(const FieldElement& x) {
  const Field& k = x.field();
  if (x.is_zero()) return FieldElement(0);
  if (x.is_rational()) {
    if (auto r = rational_sqrt(x.a0())) return FieldElement(*r, 0, k);
    if (!k.is_rational()) {
      if (auto r = rational_sqrt(x.a0() / k.d())) return FieldElement(0, *r, k);
    }
    return std::nullopt;
  }
  // (u + w sqrt(d))^2 = u^2 + d w^2 + 2uw sqrt(d); with a1 != 0 this forces
  // 4d w^4 - 4 a0 w^2 + a1^2 = 0, so w^2 = (a0 +- sqrt(N(x))) / (2d).
  auto n = rational_sqrt(x.norm());
  if (!n) return std::nullopt;
  for (const Rational& w2 : {Rational((x.a0() + *n) / (2 * k.d())), Rational((x.a0() - *n) / (2 * k.d()))}) {
    if (sgn(w2) <= 0) continue;
    auto w = rational_sqrt(w2);
    if (!w) continue;
    Rational u = x.a1() / (2 * *w);
    FieldElement root(u, *w, k);
    if (root * root == x) return root;
  }
  return std::nullopt;
}

bool is_square(const FieldElement& x) { return square_root(x).has_value(); }

FieldElement square_class_representative(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "square class of zero");
  const Field& k = x.field();
  if (is_square(x)) return FieldElement(Rational(1), Rational(0), k);
  if (x.is_rational()) {
    Integer s = squarefree_part(Integer(x.a0().get_num() * x.a0().get_den()));
    if (!k.is_rational()) {
      Integer g;
      Integer d(k.d());
      mpz_gcd(g.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
      Integer alt = s * d / (g * g);
      if (abs(alt) < abs(s)) s = alt;
    }
    return FieldElement(Rational(s), 0, k);
  }
  auto [A, B, c] = integral_form(x);
  Integer g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  Rational content(g, c);
  content.canonicalize();
  Integer s = squarefree_part(Integer(content.get_num() * content.get_den()));
  return FieldElement(Rational(s * (A / g)), Rational(s * (B / g)), k);
}

}  // namespace qhyp
