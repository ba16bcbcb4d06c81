#include "qpadic/padic_functions.hpp"

#include <algorithm>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"

namespace qpadic {
namespace {

int floor_log(long n, std::int64_t p) {
  int k = 0;
  for (long m = n; m >= p; m /= static_cast<long>(p)) ++k;
  return k;
}

// log(1 + z) for v(z) in the unit disk, returned modulo p^n.
PadicScalar log1p_series(const PadicScalar& z, int n) {
  const std::int64_t p = z.prime();
  if (z.is_zero()) return PadicScalar::zero(p, std::min(n, z.abs_precision()));
  const int vz = z.valuation();
  long nmax = 1;
  while (nmax * vz - floor_log(nmax, p) < n) ++nmax;
  const int work = n + floor_log(nmax, p) + 2;
  const PadicScalar zl = z.lifted(work);
  PadicScalar acc = PadicScalar::zero(p);
  PadicScalar power = zl;
  for (long k = 1; k < nmax; ++k) {
    const PadicScalar term = power / k;
    if (k % 2 == 1) {
      acc += term;
    } else {
      acc -= term;
    }
    power *= zl;
  }
  acc = acc.with_abs_precision(n);
  if (acc.abs_precision() < n) throw PrecisionError("log series lost precision");
  return acc;
}

}  // namespace

std::int64_t p_star(std::int64_t p) { return p == 2 ? 4 : p; }

int unit_disk_valuation(std::int64_t p) { return p == 2 ? 2 : 1; }

PadicScalar teichmuller(const mpz_class& a, std::int64_t p, int precision) {
  if (precision < 1) throw DomainError("teichmuller: precision must be positive");
  if (mod(a, mpz_class(static_cast<long>(p))) == 0) {
    throw DomainError("teichmuller: " + a.get_str() + " is divisible by " + std::to_string(p));
  }
  if (p == 2) {
    const bool plus = mod(a, mpz_class(4)) == 1;
    return PadicScalar::from_rational(p, plus ? 1 : -1, precision);
  }
  const mpz_class& m = prime_power(p, precision);
  mpz_class x = mod(a, m);
  const mpz_class e = static_cast<long>(p);
  for (int it = 0; it <= precision + 1; ++it) {
    mpz_class y;
    mpz_powm(y.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    if (y == x) break;
    x = y;
  }
  return PadicScalar::from_parts(p, 0, x, precision);
}

PadicScalar teichmuller(std::int64_t a, std::int64_t p, int precision) {
  return teichmuller(mpz_class(static_cast<long>(a)), p, precision);
}

PadicScalar plog(const PadicScalar& x) {
  if (x.is_zero()) throw DomainError("log of a value indistinguishable from zero");
  const std::int64_t p = x.prime();
  const int r = x.rel_precision();
  const PadicScalar u = PadicScalar::from_parts(p, 0, x.unit(), r);
  const PadicScalar w = teichmuller(x.unit(), p, r);
  return log1p_series(u / w - 1, r);
}

PadicScalar pexp(const PadicScalar& x) {
  const std::int64_t p = x.prime();
  const int n = x.abs_precision();
  if (n >= PadicScalar::kExact) throw DomainError("exp of an exact zero: no precision available");
  if (x.is_zero()) {
    if (n < unit_disk_valuation(p)) throw PrecisionError("exp argument known too coarsely");
    return PadicScalar::one(p, n);
  }
  const int vx = x.valuation();
  if (vx < unit_disk_valuation(p)) {
    throw DomainError("exp argument outside the convergence disk (valuation " + std::to_string(vx) + ")");
  }
  // v(x^k / k!) >= k vx - (k - 1)/(p - 1)
  long kmax = 1;
  while (kmax * vx - (kmax - 1) / (p - 1) < n) ++kmax;
  const int work = n + vx + 2;
  const PadicScalar xl = x.lifted(work);
  PadicScalar acc = PadicScalar::one(p, work);
  PadicScalar term = PadicScalar::one(p, work);
  for (long k = 1; k < kmax; ++k) {
    term = term * xl / k;
    acc += term;
  }
  acc = acc.with_abs_precision(n);
  if (acc.abs_precision() < n) throw PrecisionError("exp series lost precision");
  return acc;
}

PadicScalar binom_general(const PadicScalar& s, long m) {
  const std::int64_t p = s.prime();
  if (m < 0) throw DomainError("binomial with negative lower index");
  if (s.abs_precision() >= PadicScalar::kExact) throw DomainError("binomial needs a finite-precision argument");
  if (m == 0) return PadicScalar::one(p, std::max(1, s.abs_precision()));
  PadicScalar acc = s;
  for (long j = 1; j < m; ++j) acc *= (s - j);
  return acc / mpq_class(factorial(m));
}

PadicScalar padic_power(const PadicScalar& base, const PadicScalar& e) {
  const std::int64_t p = base.prime();
  const PadicScalar d = base - 1;
  if (d.valuation() < unit_disk_valuation(p)) throw DomainError("power base is not in the 1-unit disk");
  if (e.valuation() < 0) throw DomainError("power exponent is not a p-adic integer");
  if (e.abs_precision() >= PadicScalar::kExact) return PadicScalar::one(p, base.abs_precision());
  const PadicScalar arg = e * plog(base);
  if (arg.abs_precision() >= PadicScalar::kExact) return PadicScalar::one(p, base.abs_precision());
  return pexp(arg);
}

bool in_disk_D(const PadicScalar& s) { return s.valuation() >= 0; }

PadicScalar power_one_minus_s(const PadicScalar& base, const PadicScalar& s) {
  if (!in_disk_D(s)) throw DomainError("s lies outside the certified disk v(s) >= 0");
  if (s.abs_precision() >= PadicScalar::kExact) return base;
  return padic_power(base, 1 - s);
}

}  // namespace qpadic
