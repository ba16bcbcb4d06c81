#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace qpadic {

/// Dense integer polynomial, coefficient i multiplies x^i. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
using IntPoly = std::vector<mpz_class>;

namespace poly {

void trim(IntPoly& a);
int degree(const IntPoly& a);  // -1 for zero

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const mpz_class& c);
IntPoly shift(const IntPoly& a, int k);  // a * x^k, k >= 0
IntPoly pow(const IntPoly& a, int e);

/// gcd of the coefficients (non-negative).
mpz_class content(const IntPoly& a);
void divexact_scalar(IntPoly& a, const mpz_class& c);

/// Remainder of a modulo a monic m.
IntPoly rem_monic(const IntPoly& a, const IntPoly& m);
/// Quotient of a by a monic m; the division must be exact.
IntPoly divexact_monic(const IntPoly& a, const IntPoly& m);

/// p(x^g).
IntPoly substitute_power(const IntPoly& a, int g);

/// Value at a rational point.
mpq_class evaluate(const IntPoly& a, const mpq_class& x);

/// x^n - 1 and 1 + x + ... + x^(n-1).
IntPoly x_pow_minus_one(int n);
IntPoly bracket(int n);

}  // namespace poly

/// The d-th cyclotomic polynomial (cached, thread safe).
const IntPoly& cyclotomic(std::int64_t d);

/// True when the d-th cyclotomic polynomial divides a.
bool divisible_by_cyclotomic(const IntPoly& a, std::int64_t d);

}  // namespace qpadic
