#include "doctest.h"

#include <algorithm>
#include <set>

#include "../support/local_oracle.hpp"
#include "../support/random.hpp"
#include "qhyp/local_symbols.hpp"

using namespace qhyp;

namespace {

const Field Q = Field::rationals();
const Field K5 = Field::quadratic(5);

FieldElement el(long a0, long a1, const Field& k) { return FieldElement(Rational(a0), Rational(a1), k); }

std::vector<std::string> names(const std::vector<Place>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST_CASE("symbols: examples") {
  CHECK(hilbert_symbol(-1, -1, Place::real(0)) == -1);
  CHECK(hilbert_symbol(-1, -1, Place::finite(3)) == 1);
  CHECK(hilbert_symbol(-1, -1, Place::finite(2)) == -1);
  CHECK(hilbert_symbol(2, 3, Place::finite(3)) == -1);
  CHECK(hilbert_symbol(1, -7, Place::finite(7)) == 1);
  CHECK_THROWS_AS(hilbert_symbol(0, 3, Place::finite(3)), Error);
  CHECK_THROWS_AS(hilbert_symbol(el(1, 1, K5), 3, Place::finite(3)), Error);  // 3 is inert in Q(sqrt(5))
}

TEST_CASE("symbols over Q agree with solvability search") {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    const oracle::LocalModel model(Q, Place::finite(p));
    for (long a = -12; a <= 12; ++a) {
      for (long b = -12; b <= 12; ++b) {
        if (a == 0 || b == 0) continue;
        INFO("p = ", p, " a = ", a, " b = ", b);
        CHECK(hilbert_symbol(a, b, Place::finite(p)) == model.hilbert(a, b));
      }
    }
  }
}

TEST_CASE("symbols over quadratic fields agree with solvability search") {
  testsupport::Sampler s(23);
  struct Case {
    Field k;
    Place v;
    int samples;
  };
  const Field K2 = Field::quadratic(2), K3 = Field::quadratic(3);
  std::vector<Case> cases = {
      {K5, Place::finite(3, PrimePosition::Inert), 25},
      {K5, Place::finite(5, PrimePosition::Ramified), 40},
      {K3, Place::finite(3, PrimePosition::Ramified), 40},
      {K5, Place::finite(2, PrimePosition::Inert), 25},
      {K2, Place::finite(2, PrimePosition::Ramified), 40},
      {K3, Place::finite(2, PrimePosition::Ramified), 40},
  };
  for (const Place& v : places_over(11, K5)) cases.push_back({K5, v, 40});
  for (const Place& v : places_over(7, K2)) cases.push_back({K2, v, 40});
  for (const auto& c : cases) {
    const oracle::LocalModel model(c.k, c.v);
    for (int i = 0; i < c.samples; ++i) {
      const FieldElement a = s.element(c.k, 12), b = s.element(c.k, 12);
      INFO(c.k.to_string(), " at ", c.v.to_string(), ": a = ", a.to_string(), ", b = ", b.to_string());
      CHECK(hilbert_symbol(a, b, c.v) == model.hilbert(a, b));
    }
  }
}

TEST_CASE("symbol identities") {
  testsupport::Sampler s(29);
  const std::vector<Field> fields = {Q, K5, Field::quadratic(2), Field::quadratic(13)};
  for (const Field& k : fields) {
    for (int i = 0; i < 40; ++i) {
      const FieldElement a = s.element(k, 20), b = s.element(k, 20), c = s.element(k, 20);
      std::set<Place> places;
      for (const auto& v : symbol_support(a, b * c)) places.insert(v);
      for (const auto& v : symbol_support(a, b)) places.insert(v);
      for (const auto& v : symbol_support(a, c)) places.insert(v);
      for (const Place& v : places) {
        INFO(k.to_string(), " ", v.to_string(), " ", a.to_string(), " ", b.to_string(), " ", c.to_string());
        CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
        CHECK(hilbert_symbol(a, b * c, v) == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v));
        CHECK(hilbert_symbol(a, -a, v) == 1);
        if (is_local_square(b, v)) CHECK(hilbert_symbol(a, b, v) == 1);
      }
    }
  }
}

TEST_CASE("support") {
  CHECK(names(symbol_support(-1, -1)) == std::vector<std::string>{"inf0", "2"});
  CHECK(names(symbol_support(-1, -3)) == std::vector<std::string>{"inf0", "2", "3"});
  for (const Place& v : symbol_support(1, 30)) CHECK(hilbert_symbol(1, 30, v) == 1);
  // Every place where the symbol is -1 lies in the support: test primes up to 60.
  testsupport::Sampler s(31);
  for (int i = 0; i < 50; ++i) {
    const FieldElement a = s.element(Q, 60), b = s.element(Q, 60);
    const auto sup = symbol_support(a, b);
    for (long p : testsupport::primes_up_to(60)) {
      const Place v = Place::finite(p);
      if (std::find(sup.begin(), sup.end(), v) == sup.end()) CHECK(hilbert_symbol(a, b, v) == 1);
    }
  }
}

TEST_CASE("product formula") {
  CHECK(product_formula_check(-1, -1));
  CHECK(product_formula_check(1, 17));
  testsupport::Sampler s(37);
  for (int i = 0; i < 300; ++i) CHECK(product_formula_check(s.element(Q, 100), s.element(Q, 100)));
  const Field K13 = Field::quadratic(13);
  for (int i = 0; i < 50; ++i) CHECK(product_formula_check(s.element(K13, 30), s.element(K13, 30)));
  const Field K17 = Field::quadratic(17);
  try {
    product_formula_check(el(1, 1, K17), el(3, 0, K17));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedDyadic);
  }
}
