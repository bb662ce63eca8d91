#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace wlpw {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Accepts "p", "-p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

Rational power(const Rational& base, unsigned exponent);

// Exact Gaussian elimination.
Rational determinant(RationalMatrix m);
std::size_t rank(RationalMatrix m);

// Basis of { x : m x = 0 }.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

// Solves m x = rhs for square nonsingular m.
RationalVector solve(RationalMatrix m, RationalVector rhs);

// True if q is the square of a rational; the root is written when non-null.
bool rational_sqrt(const Rational& q, Rational* root);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace wlpw
