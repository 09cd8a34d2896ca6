#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qhyp/error.hpp"

namespace qhyp {

using Integer = mpz_class;
using Rational = mpq_class;

/// The base field k: either Q or a real quadratic field Q(sqrt(d)) with d
/// squarefree and d > 1.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws InvalidField unless d is squarefree and d > 1.
  static Field quadratic(long d);

  bool is_rational() const noexcept { return d_ == 1; }
  /// Radicand; 1 for Q.
  long d() const noexcept { return d_; }
  int degree() const noexcept { return is_rational() ? 1 : 2; }
  /// Field discriminant: 1 for Q, d when d = 1 mod 4, else 4d.
  long discriminant() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(long d) : d_(d) {}
  long d_ = 1;
};

/// a0 + a1*sqrt(d) with exact rational coefficients. Elements with a1 = 0 mix
/// freely with elements of any field.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long v) : a0_(v) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& v) : a0_(v) {}  // NOLINT
  FieldElement(Rational a0, Rational a1, Field field);

  /// The element sqrt(d) of the given quadratic field.
  static FieldElement sqrt_d(const Field& field);

  const Rational& a0() const noexcept { return a0_; }
  const Rational& a1() const noexcept { return a1_; }
  const Field& field() const noexcept { return field_; }

  bool is_zero() const { return sgn(a0_) == 0 && sgn(a1_) == 0; }
  bool is_rational() const { return sgn(a1_) == 0; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  /// Throws DivisionByZero.
  FieldElement& operator/=(const FieldElement& o);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws DivisionByZero.
  FieldElement inverse() const;
  /// a0 - a1*sqrt(d).
  FieldElement conjugate() const;
  /// x * conjugate(x), a rational.
  Rational norm() const;
  FieldElement pow(long e) const;

  /// Same value; the field tag only matters when a1 != 0.
  friend bool operator==(const FieldElement& x, const FieldElement& y);

  std::string to_string() const;

 private:
  Field join(const FieldElement& o) const;

  Rational a0_;
  Rational a1_;
  Field field_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

enum class Splitting { Rational, Split, Inert, Ramified };

/// Which prime of k above p a finite place denotes. Over Q the single place
/// above p is tagged Rational. For split p the first place is the embedding
/// sqrt(d) -> s with s = r (mod p), r the least positive root of d mod p.
enum class PrimePosition { Rational, SplitFirst, SplitSecond, Inert, Ramified };

const char* to_string(Splitting s) noexcept;
const char* to_string(PrimePosition p) noexcept;

/// A place of k: a real embedding (index 0 sends sqrt(d) to +sqrt(d)) or a
/// finite place above a rational prime.
struct Place {
  enum class Kind { Real, Finite };

  Kind kind = Kind::Real;
  int embedding = 0;
  long p = 0;
  PrimePosition position = PrimePosition::Rational;

  static Place real(int embedding = 0) { return Place{Kind::Real, embedding, 0, PrimePosition::Rational}; }
  static Place finite(long p, PrimePosition pos = PrimePosition::Rational) {
    return Place{Kind::Finite, 0, p, pos};
  }

  bool is_real() const noexcept { return kind == Kind::Real; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_dyadic() const noexcept { return is_finite() && p == 2; }

  /// Image under the nontrivial automorphism of a quadratic field.
  Place conjugate() const;

  std::string to_string() const;

  friend auto operator<=>(const Place&, const Place&) = default;
};

std::ostream& operator<<(std::ostream& os, const Place& v);

// Integer helpers -----------------------------------------------------------

bool is_prime(long n);
/// Distinct prime divisors of |n|, ascending. n = 0 yields nothing.
std::vector<Integer> prime_divisors(const Integer& n);
/// Largest e with p^e | n; n != 0.
long padic_valuation(const Integer& n, long p);
long padic_valuation(const Rational& x, long p);
/// Legendre symbol (a/p) for odd prime p, in {-1, 0, 1}.
int legendre(const Integer& a, long p);
/// Signed squarefree part of a nonzero integer.
Integer squarefree_part(const Integer& n);

// Places ---------------------------------------------------------------------

Splitting split_prime(long p, const Field& k);
/// The real places of k in embedding order.
std::vector<Place> real_places(const Field& k);
/// The finite places of k above p.
std::vector<Place> places_over(long p, const Field& k);
/// Throws InvalidArgument when v does not describe a place of k.
void check_place(const Place& v, const Field& k);

/// Exact sign of x under a real embedding, in {-1, 0, 1}.
int sign_at_real_place(const FieldElement& x, const Place& v);

/// Normalized valuation at a finite place (uniformizer has valuation 1).
/// x != 0. Works at every finite place, dyadic ones included.
long valuation(const FieldElement& x, const Place& v);

/// Quadratic residue character of a v-unit at an odd finite place.
int residue_character(const FieldElement& unit, const Place& v);

/// A uniformizer of k_v chosen inside k.
FieldElement uniformizer(const Field& k, const Place& v);

/// Whether x != 0 is a square in the completion k_v. Throws
/// UnsupportedDyadic at a dyadic place of a quadratic field in which 2
/// splits.
bool is_local_square(const FieldElement& x, const Place& v);

/// Square root in k, if one exists. Solved exactly from the rational
/// equations obtained by expanding (u + w*sqrt(d))^2.
std::optional<FieldElement> square_root(const FieldElement& x);
bool is_square(const FieldElement& x);

/// A reduced representative of x k*^2: over Q the squarefree integer; over
/// Q(sqrt(d)) rational content is made squarefree and rational classes are
/// reduced modulo d.
FieldElement square_class_representative(const FieldElement& x);

}  // namespace qhyp
