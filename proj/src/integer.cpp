#include "qpadic/integer.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace qpadic {

const mpz_class& prime_power(std::int64_t p, int k) {
  if (k < 0) throw std::invalid_argument("prime_power: negative exponent");
  thread_local std::map<std::int64_t, std::vector<mpz_class>> cache;
  auto& powers = cache[p];
  if (powers.empty()) powers.emplace_back(1);
  while (static_cast<int>(powers.size()) <= k) {
    powers.push_back(powers.back() * static_cast<long>(p));
  }
  return powers[static_cast<std::size_t>(k)];
}

int valuation(const mpz_class& n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  mpz_class pp = static_cast<long>(p);
  mpz_class rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int valuation(const mpq_class& r, std::int64_t p) {
  return valuation(mpz_class(r.get_num()), p) - valuation(mpz_class(r.get_den()), p);
}

int factorial_valuation(std::int64_t n, std::int64_t p) {
  int v = 0;
  for (std::int64_t m = n / p; m > 0; m /= p) v += static_cast<int>(m);
  return v;
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("inverse_mod: not a unit");
  }
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto [q, e] : factorize(n)) result = result / q * (q - 1);
  return result;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  a = mod(a, m);
  if (gcd(a, m) != 1) throw std::domain_error("multiplicative_order: not a unit");
  std::int64_t x = a;
  std::int64_t k = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * a) % m);
    ++k;
  }
  return k;
}

std::int64_t primitive_root(std::int64_t m) {
  if (m == 2) return 1;
  if (m == 4) return 3;
  const std::int64_t phi = euler_phi(m);
  for (std::int64_t g = 2; g < m; ++g) {
    if (gcd(g, m) == 1 && multiplicative_order(g, m) == phi) return g;
  }
  throw std::domain_error("primitive_root: group is not cyclic");
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(std::int64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::vector<mpq_class> bernoulli_numbers(int n) {
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  std::vector<mpq_class> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (int k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -acc / mpq_class(m + 1);
    b[static_cast<std::size_t>(m)].canonicalize();
  }
  return b;
}

}  // namespace qpadic
