#pragma once

#include <cstdint>

#include "qpadic/padic.hpp"

namespace qpadic {

/// p* = p for odd p and 4 for p = 2.
std::int64_t p_star(std::int64_t p);

/// Smallest valuation of x - 1 for which the exponential/binomial series used
/// by this library are certified: 1 for odd p, 2 for p = 2.
int unit_disk_valuation(std::int64_t p);

/// Iwasawa logarithm: log_p(p) = 0 and roots of unity map to 0. The result is
/// known to the relative precision of x.
PadicScalar plog(const PadicScalar& x);

/// Exponential series; needs v(x) >= 1 (odd p) or v(x) >= 2 (p = 2).
PadicScalar pexp(const PadicScalar& x);

/// Root of unity congruent to a mod p (mod 4 when p = 2), to `precision` digits.
PadicScalar teichmuller(const mpz_class& a, std::int64_t p, int precision);
PadicScalar teichmuller(std::int64_t a, std::int64_t p, int precision);

/// s(s-1)...(s-m+1)/m!
PadicScalar binom_general(const PadicScalar& s, long m);

/// base^e = exp(e log base) for a 1-unit base and p-adic integer e.
PadicScalar padic_power(const PadicScalar& base, const PadicScalar& e);

/// True when s lies in the disk on which s-powers of 1-units are evaluated
/// (v(s) >= 0, see the ledger).
bool in_disk_D(const PadicScalar& s);

/// base^(1 - s) for a 1-unit base and s in the disk.
PadicScalar power_one_minus_s(const PadicScalar& base, const PadicScalar& s);

}  // namespace qpadic
