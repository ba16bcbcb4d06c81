#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace qpadic {

/// p^k as a GMP integer. Powers are memoised per thread.
const mpz_class& prime_power(std::int64_t p, int k);

/// Exponent of p in n; n must be nonzero.
int valuation(const mpz_class& n, std::int64_t p);
int valuation(std::int64_t n, std::int64_t p);

/// Valuation of a nonzero rational.
int valuation(const mpq_class& r, std::int64_t p);

/// v_p(n!) by Legendre's formula.
int factorial_valuation(std::int64_t n, std::int64_t p);

/// Non-negative residue of a modulo m.
mpz_class mod(const mpz_class& a, const mpz_class& m);

/// Inverse of a modulo m; a must be a unit.
mpz_class inverse_mod(const mpz_class& a, const mpz_class& m);

bool is_prime(std::int64_t n);

/// Prime factorisation as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t n);

/// Non-negative a mod m for machine integers.
std::int64_t mod(std::int64_t a, std::int64_t m);

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Smallest primitive root modulo an odd prime power or 2, 4.
std::int64_t primitive_root(std::int64_t m);

mpz_class binomial(std::int64_t n, std::int64_t k);
mpz_class factorial(std::int64_t n);

/// Classical Bernoulli numbers B_0..B_n with B_1 = -1/2.
std::vector<mpq_class> bernoulli_numbers(int n);

}  // namespace qpadic
