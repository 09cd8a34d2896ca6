#pragma once

#include <vector>

#include "qhyp/field.hpp"

namespace qhyp {

/// +1 or -1.
using SymbolValue = int;

/// Hilbert symbol (a,b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
/// solution over k_v. At the single dyadic place of a quadratic field in which
/// 2 is inert or ramified the value is read off the product formula. Throws
/// UnsupportedDyadic when 2 splits in k and v is dyadic.
SymbolValue hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& v);

/// Places where (a,b)_v can be -1: real places and the finite places above 2,
/// the primes of the discriminant and the primes of N(a), N(b). Sorted.
std::vector<Place> symbol_support(const FieldElement& a, const FieldElement& b);

/// Support of a whole list of coefficients (union of pairwise supports).
std::vector<Place> coefficient_support(const Field& k, const std::vector<FieldElement>& coeffs);

/// Product of (a,b)_v over symbol_support equals +1.
bool product_formula_check(const FieldElement& a, const FieldElement& b);

}  // namespace qhyp
