#include "doctest.h"

#include <algorithm>
#include <set>

#include "../support/local_oracle.hpp"
#include "../support/random.hpp"
#include "qhyp/local_symbols.hpp"
#include "qhyp/quadratic_form.hpp"

using namespace qhyp;

namespace {

const Field Q = Field::rationals();
const Field K2 = Field::quadratic(2);

QuadraticForm form(const Field& k, std::vector<FieldElement> cs) { return QuadraticForm(k, std::move(cs)); }

// Hasse invariant through the orthogonal-sum rule
// c(q1 + q2) = c(q1) c(q2) (det q1, det q2), one coefficient at a time.
int hasse_by_chain(const std::vector<FieldElement>& a, const Place& v) {
  int c = 1;
  FieldElement det = a.front();
  for (std::size_t i = 1; i < a.size(); ++i) {
    c *= hilbert_symbol(det, a[i], v);
    det *= a[i];
  }
  return c;
}

QuadraticForm random_form(testsupport::Sampler& s, const Field& k, std::size_t n, long bound) {
  std::vector<FieldElement> cs;
  for (std::size_t i = 0; i < n; ++i) cs.push_back(s.element(k, bound));
  return QuadraticForm(k, cs);
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(form(Q, {1, 0}), Error);
  CHECK_THROWS_AS(form(Q, {FieldElement(Rational(1), Rational(1), K2)}), Error);
  const QuadraticForm q = form(Q, {2, 3}) + form(Q, {5});
  CHECK(q.dim() == 3);
  CHECK(q.det() == FieldElement(30));
  CHECK(q.scaled(2).coefficients()[0] == FieldElement(4));
}

TEST_CASE("local invariants: examples") {
  for (long p : {2L, 3L, 5L}) {
    const auto inv = local_invariants(form(Q, {1, 1, 1, 1}), Place::finite(p));
    CHECK(inv.dim == 4);
    CHECK(inv.det == FieldElement(1));
    CHECK(inv.hasse == 1);
  }
  const auto inv = local_invariants(form(Q, {2, 3}), Place::finite(2));
  CHECK(inv.det == FieldElement(6));
  CHECK(inv.hasse == hilbert_symbol(2, 3, Place::finite(2)));
  CHECK(inv.hasse == -1);
  const auto real = local_invariants(form(Q, {1, 1, -1}), Place::real(0));
  REQUIRE(real.signature.has_value());
  CHECK(*real.signature == Signature{2, 1});
  // the norm form of (-1,-1/Q) is anisotropic at 2
  CHECK_FALSE(isotropic_at(form(Q, {1, 1, 1, 1}), Place::finite(2)));
}

TEST_CASE("signatures") {
  CHECK(signature_at(form(Q, {1, 1, -1}), Place::real(0)) == Signature{2, 1});
  CHECK(signature_at(form(Q, {-1, -1, -1}), Place::real(0)) == Signature{0, 3});
  const FieldElement r2 = FieldElement::sqrt_d(K2);
  const QuadraticForm q = form(K2, {1, 1, -r2});
  CHECK(signature_at(q, Place::real(0)) == Signature{2, 1});
  CHECK(signature_at(q, Place::real(1)) == Signature{3, 0});
  CHECK_THROWS_AS(signature_at(q, Place::finite(2, PrimePosition::Ramified)), Error);
}

TEST_CASE("Hasse invariant matches the orthogonal-sum chain") {
  testsupport::Sampler s(41);
  for (const Field& k : {Q, K2, Field::quadratic(5)}) {
    for (int i = 0; i < 40; ++i) {
      const QuadraticForm q = random_form(s, k, static_cast<std::size_t>(s.integer(1, 6)), 25);
      for (const Place& v : form_support(q)) {
        CHECK(local_invariants(q, v).hasse == hasse_by_chain(q.coefficients(), v));
      }
    }
  }
}

TEST_CASE("isometry") {
  CHECK(forms_isometric(form(Q, {1, 1}), form(Q, {2, 2})));
  CHECK_FALSE(forms_isometric(form(Q, {1, 1}), form(Q, {1, -1})));
  CHECK_FALSE(forms_isometric(form(Q, {1, 1}), form(Q, {1, 3})));
  CHECK_FALSE(forms_isometric(form(Q, {1, 1, 1}), form(Q, {1, 1})));
  // same square-class det and signature, but the Hasse invariants differ at 3
  CHECK(forms_isometric(form(Q, {1, 1, 1}), form(Q, {2, 3, 6})));
  CHECK_FALSE(forms_isometric(form(Q, {1, 1, 1}), form(Q, {1, 3, 3})));
  CHECK_THROWS_AS(forms_isometric(form(Q, {1}), form(K2, {1})), Error);

  testsupport::Sampler s(43);
  for (int i = 0; i < 60; ++i) {
    const Field k = i % 2 ? Q : K2;
    const QuadraticForm q = random_form(s, k, static_cast<std::size_t>(s.integer(1, 5)), 20);
    auto cs = q.coefficients();
    std::shuffle(cs.begin(), cs.end(), s.engine());
    for (auto& c : cs) {
      const FieldElement t = s.element(k, 9);
      c *= t * t;
    }
    const QuadraticForm q2(k, cs);
    CHECK(forms_isometric(q, q));
    CHECK(forms_isometric(q, q2));
    CHECK(forms_isometric(q2, q));
  }
}

TEST_CASE("isometry is transitive on small forms") {
  std::vector<QuadraticForm> forms;
  for (long a : {1, -1, 2, 3, 5, 6})
    for (long b : {1, -1, 2, 3, 5, 6}) forms.push_back(form(Q, {a, b}));
  for (const auto& x : forms)
    for (const auto& y : forms)
      for (const auto& z : forms)
        if (forms_isometric(x, y) && forms_isometric(y, z)) CHECK(forms_isometric(x, z));
}

TEST_CASE("local isotropy agrees with a solution search") {
  testsupport::Sampler s(47);
  for (long p : {2L, 3L, 5L}) {
    const oracle::LocalModel model(Q, Place::finite(p));
    for (std::size_t n : {2u, 3u, 4u}) {
      const int samples = (n == 4 && p == 5) ? 6 : 25;
      for (int i = 0; i < samples; ++i) {
        const QuadraticForm q = random_form(s, Q, n, 30);
        INFO("p = ", p, " coeffs = ", q.coefficients()[0].to_string(), ",", q.coefficients()[1].to_string());
        CHECK(isotropic_at(q, Place::finite(p)) == model.isotropic(q.coefficients()));
      }
    }
  }
  // and at the ramified dyadic place of Q(sqrt(2)) for binary and ternary forms
  const oracle::LocalModel model(K2, Place::finite(2, PrimePosition::Ramified));
  for (int i = 0; i < 8; ++i) {
    const QuadraticForm q = random_form(s, K2, 2, 9);
    CHECK(isotropic_at(q, Place::finite(2, PrimePosition::Ramified)) == model.isotropic(q.coefficients()));
  }
}

TEST_CASE("local isotropy: examples") {
  for (long p : {2L, 3L, 7L}) CHECK(isotropic_at(form(Q, {1, -1}), Place::finite(p)));
  CHECK(isotropic_at(form(Q, {1, -1}), Place::real(0)));
  CHECK(isotropic_at(form(Q, {1, 2, 3, 5, 7}), Place::finite(7)));
  CHECK_FALSE(isotropic_at(form(Q, {3}), Place::finite(7)));
}

TEST_CASE("global isotropy") {
  CHECK_FALSE(isotropic_global(form(Q, {1, 1, -3})));
  CHECK(isotropic_global(form(Q, {1, -1, 7})));
  CHECK(isotropic_global(form(Q, {1, 1, -2})));
  CHECK_FALSE(isotropic_global(form(Q, {1, 1, 1, 1, 1})));  // definite
  CHECK(isotropic_global(form(Q, {1, 1, 1, 1, -1})));
  CHECK_FALSE(isotropic_global(form(Q, {1, -2})));
  CHECK(isotropic_global(form(Q, {1, -4})));
  // over Q(sqrt(2)) binary forms need an exact global square: 2 = sqrt(2)^2
  CHECK(isotropic_global(form(K2, {1, -2})));

  // A small integral zero certifies isotropy of a ternary form over Q.
  testsupport::Sampler s(53);
  int certified = 0;
  for (int i = 0; i < 200; ++i) {
    const long a = s.nonzero(15), b = s.nonzero(15), c = s.nonzero(15);
    bool zero = false;
    for (long x = 0; x <= 12 && !zero; ++x)
      for (long y = -12; y <= 12 && !zero; ++y)
        for (long z = -12; z <= 12 && !zero; ++z)
          if ((x || y || z) && a * x * x + b * y * y + c * z * z == 0) zero = true;
    const bool iso = isotropic_global(form(Q, {a, b, c}));
    if (zero) {
      ++certified;
      CHECK(iso);
    }
    for (const Place& v : form_support(form(Q, {a, b, c}))) {
      if (iso) CHECK(isotropic_at(form(Q, {a, b, c}), v));
    }
  }
  CHECK(certified > 20);
}

TEST_CASE("permutations do not change decisions") {
  testsupport::Sampler s(59);
  for (int i = 0; i < 40; ++i) {
    const QuadraticForm q = random_form(s, Q, 4, 20);
    auto cs = q.coefficients();
    std::reverse(cs.begin(), cs.end());
    const QuadraticForm r(Q, cs);
    CHECK(isotropic_global(q) == isotropic_global(r));
    for (const Place& v : form_support(q)) CHECK(local_invariants(q, v) == local_invariants(r, v));
  }
}
