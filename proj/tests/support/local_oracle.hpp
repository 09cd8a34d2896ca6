#pragma once

// Brute-force local arithmetic used as an oracle in tests. Independent of the
// library's symbol and square-class code: it searches O_v / p^M for zeros of
// z^2 - a x^2 - b y^2 that Hensel's lemma certifies.

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qhyp/field.hpp"

namespace oracle {

using qhyp::Field;
using qhyp::FieldElement;
using qhyp::Integer;
using qhyp::Place;
using qhyp::PrimePosition;
using qhyp::Rational;

inline long vp(Integer n, long p) {
  if (n == 0) return 1000;
  long e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

inline long vp(const Rational& x, long p) { return vp(x.get_num(), p) - vp(x.get_den(), p); }

inline long mod(const Integer& n, long q) {
  Integer r = n % q;
  if (r < 0) r += q;
  return r.get_si();
}

inline long inv_mod(long a, long q) {
  for (long x = 1; x < q; ++x) {
    if ((a * x) % q == 1) return x;
  }
  throw std::logic_error("not invertible");
}

inline long rat_mod(const Rational& x, long p, long q) {
  if (x.get_den() % p == 0) throw std::logic_error("denominator divisible by p");
  return (mod(x.get_num(), q) * inv_mod(mod(x.get_den(), q), q)) % q;
}

/// O_v / p^M with Z_p-basis {1, theta}, theta^2 = c0 + c1 theta (rank 2), or
/// Z_p / p^M (rank 1).
class LocalModel {
 public:
  LocalModel(const Field& k, const Place& v) : k_(k), v_(v), p_(v.p) {
    if (!v.is_finite()) throw std::logic_error("finite places only");
    const long v2 = (p_ == 2) ? 1 : 0;
    switch (v.position) {
      case PrimePosition::Rational:
      case PrimePosition::SplitFirst:
      case PrimePosition::SplitSecond:
        rank_ = 1;
        e_ = 1;
        break;
      case PrimePosition::Inert:
        rank_ = 2;
        e_ = 1;
        break;
      case PrimePosition::Ramified:
        rank_ = 2;
        e_ = 2;
        break;
    }
    // Enough precision that a primitive zero is Hensel-certified.
    const long two = e_ * v2;
    M_ = 1;
    while (e_ * M_ < 2 * two + 3) ++M_;
    q_ = 1;
    for (long i = 0; i < M_; ++i) q_ *= p_;
    const long d = k.d();
    if (rank_ == 2) {
      if (p_ == 2 && ((d % 4) + 4) % 4 == 1) {
        omega_ = true;
        c0_ = (d - 1) / 4;
        c1_ = 1;
      } else {
        c0_ = d;
        c1_ = 0;
      }
    }
    if (v.position == PrimePosition::SplitFirst || v.position == PrimePosition::SplitSecond) {
      // rho^2 = d in Z_p to 40 digits, rho = least positive root mod p for the
      // first place.
      long r = 1;
      while ((r * r - d) % p_ != 0) ++r;
      if (v.position == PrimePosition::SplitSecond) r = p_ - r;
      Integer pk = p_;
      Integer rho = r;
      Integer big = 1;
      for (int i = 0; i < 40; ++i) big *= p_;
      precision_ = big;
      // Newton iteration rho <- rho - (rho^2 - d) / (2 rho).
      for (int it = 0; it < 8; ++it) {
        Integer num = rho * rho - d;
        Integer den = 2 * rho;
        Integer inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), big.get_mpz_t());
        rho = (rho - num * inv) % big;
        if (rho < 0) rho += big;
      }
      rho_ = rho;
    }
    build_tables();
  }

  long size() const { return rank_ == 1 ? q_ : q_ * q_; }

  /// pi-adic valuation of a field element (exact).
  long valuation(const FieldElement& x) const {
    if (rank_ == 1 && v_.position == PrimePosition::Rational) return vp(x.a0(), p_);
    if (rank_ == 1) return split_parts(x).first;
    const long n = vp(x.norm(), p_);
    return e_ == 2 ? n : n / 2;
  }

  /// Reduction of x times an even power of the uniformizer to valuation 0 or
  /// 1, as an index into the residue ring.
  long reduce(const FieldElement& x, long* val = nullptr) const {
    const long v = valuation(x);
    if (val) *val = v;
    const long k = (v >= 0 ? v / 2 : -((-v + 1) / 2));
    if (rank_ == 1 && v_.position != PrimePosition::Rational) {
      const auto [w, unit] = split_parts(x);
      return w - 2 * k == 1 ? (unit * p_) % q_ : unit;
    }
    FieldElement y = x;
    const FieldElement pi2 = uniformizer_squared();
    if (k > 0) y = y / pi2.pow(k);
    if (k < 0) y = y * pi2.pow(-k);
    if (rank_ == 1) return rat_mod(y.a0(), p_, q_);
    Rational s = y.a0(), t = y.a1();
    if (omega_) {
      // a0 + a1 sqrt(d) = (a0 - a1) + 2 a1 omega
      s = y.a0() - y.a1();
      t = 2 * y.a1();
    }
    return index(rat_mod(s, p_, q_), rat_mod(t, p_, q_));
  }

  /// Whether z^2 = sum c_i x_i^2 has a nontrivial solution over k_v.
  bool represents_zero(const std::vector<FieldElement>& c) const {
    std::vector<long> rc, vc;
    for (const auto& x : c) {
      long v = 0;
      rc.push_back(reduce(x, &v));
      vc.push_back(((v % 2) + 2) % 2);
    }
    const long two = e_ * (p_ == 2 ? 1 : 0);
    const long tmax = (e_ * M_ - 1) / 2;
    const long n = size();
    // certified: some x_i so far satisfies the Hensel condition.
    std::function<bool(std::size_t, long, bool)> search = [&](std::size_t i, long acc, bool certified) {
      if (i == rc.size()) {
        const long vz = min_root_val_[acc];
        return vz >= 0 && (certified || two + vz <= tmax);
      }
      for (long x = 0; x < n; ++x) {
        const long next = add(acc, mul(rc[i], square_[x]));
        if (search(i + 1, next, certified || two + vc[i] + val_[x] <= tmax)) return true;
      }
      return false;
    };
    return search(0, 0, false);
  }

  /// Solvability of z^2 = a x^2 + b y^2 over k_v.
  int hilbert(const FieldElement& a, const FieldElement& b) const { return represents_zero({a, b}) ? 1 : -1; }

  /// Isotropy of the diagonal form <a_1, ..., a_n>, n >= 2, through
  /// a_n q = <a_n a_1, ..., a_n a_{n-1}, 1>.
  bool isotropic(const std::vector<FieldElement>& a) const {
    std::vector<FieldElement> c;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) c.push_back(-(a[i] * a.back()));
    return represents_zero(c);
  }

  bool is_square(const FieldElement& x) const {
    long v = 0;
    const long r = reduce(x, &v);
    if (((v % 2) + 2) % 2 != 0) return false;
    return min_root_val_[r] >= 0;
  }

 private:
  long index(long s, long t) const { return rank_ == 1 ? s : s * q_ + t; }
  long coord_s(long i) const { return rank_ == 1 ? i : i / q_; }
  long coord_t(long i) const { return rank_ == 1 ? 0 : i % q_; }

  long add(long i, long j) const {
    return index((coord_s(i) + coord_s(j)) % q_, (coord_t(i) + coord_t(j)) % q_);
  }

  long mul(long i, long j) const {
    const long s1 = coord_s(i), t1 = coord_t(i), s2 = coord_s(j), t2 = coord_t(j);
    if (rank_ == 1) return (s1 * s2) % q_;
    const long tt = (t1 * t2) % q_;
    const long s = (s1 * s2 + ((c0_ % q_ + q_) % q_) * tt) % q_;
    const long t = (s1 * t2 + s2 * t1 + c1_ * tt) % q_;
    return index(s, t);
  }

  long elem_val(long i) const {
    const long s = coord_s(i), t = coord_t(i);
    if (rank_ == 1) return s == 0 ? 1000 : vp(Integer(s), p_);
    if (e_ == 1) return std::min(s == 0 ? 1000 : vp(Integer(s), p_), t == 0 ? 1000 : vp(Integer(t), p_));
    // Ramified: valuation of the norm, capped by the working precision.
    const long c0 = ((c0_ % q_) + q_) % q_;
    long nn = (s * s + c1_ * s * t - c0 * ((t * t) % q_)) % q_;
    nn = ((nn % q_) + q_) % q_;
    if (nn == 0) return 1000;
    return vp(Integer(nn), p_);
  }

  FieldElement uniformizer_squared() const {
    if (e_ == 1) return FieldElement(p_ * p_);
    FieldElement r = FieldElement::sqrt_d(k_);
    if (p_ == 2 && ((k_.d() % 4) + 4) % 4 == 3) r = r + FieldElement(1);
    return r * r;
  }

  // Valuation and unit part mod q of the image of x in Q_p at a split place.
  std::pair<long, long> split_parts(const FieldElement& x) const {
    const Integer den = lcm_den(x);
    const Integer A = Integer(x.a0() * den), B = Integer(x.a1() * den);
    Integer img = (A + B * rho_) % precision_;
    if (img < 0) img += precision_;
    const long w = vp(img, p_);
    if (w > 30) throw std::logic_error("valuation beyond working precision");
    Integer u = img;
    for (long i = 0; i < w; ++i) u /= p_;
    const long wd = vp(den, p_);
    Integer dd = den;
    for (long i = 0; i < wd; ++i) dd /= p_;
    const long unit = (mod(u, q_) * inv_mod(mod(dd, q_), q_)) % q_;
    return {w - wd, unit};
  }

  static Integer lcm_den(const FieldElement& x) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), x.a0().get_den_mpz_t(), x.a1().get_den_mpz_t());
    return l;
  }

  void build_tables() {
    const long n = size();
    square_.resize(n);
    val_.resize(n);
    min_root_val_.assign(n, -1);
    for (long z = 0; z < n; ++z) {
      square_[z] = mul(z, z);
      val_[z] = elem_val(z);
    }
    for (long z = 0; z < n; ++z) {
      long& m = min_root_val_[square_[z]];
      if (m < 0 || val_[z] < m) m = val_[z];
    }
  }

  Field k_;
  Place v_;
  long p_;
  long rank_ = 1, e_ = 1, M_ = 1, q_ = 1;
  long c0_ = 0, c1_ = 0;
  bool omega_ = false;
  Integer rho_ = 0, precision_ = 1;
  std::vector<long> square_, val_, min_root_val_;
};

/// Legendre symbol by listing the squares mod p.
inline int legendre_brute(const Integer& a, long p) {
  const long r = mod(a, p);
  if (r == 0) return 0;
  for (long x = 1; x < p; ++x) {
    if ((x * x) % p == r) return 1;
  }
  return -1;
}

}  // namespace oracle
