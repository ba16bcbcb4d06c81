#include "qpadic/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"

namespace qpadic {
namespace {

int clamp_precision(long n) {
  if (n >= PadicScalar::kExact) return PadicScalar::kExact;
  if (n <= -PadicScalar::kExact) return -PadicScalar::kExact;
  return static_cast<int>(n);
}

}  // namespace

PadicScalar PadicScalar::zero(std::int64_t p, int abs_precision) {
  PadicScalar z;
  z.prime_ = p;
  z.zero_ = true;
  z.abs_ = clamp_precision(abs_precision);
  return z;
}

PadicScalar PadicScalar::one(std::int64_t p, int rel_precision) {
  return from_parts(p, 0, 1, rel_precision);
}

PadicScalar PadicScalar::from_integer(std::int64_t p, const mpz_class& n, int rel_precision) {
  return from_rational(p, mpq_class(n), rel_precision);
}

PadicScalar PadicScalar::from_rational(std::int64_t p, const mpq_class& r, int rel_precision) {
  if (p < 2 || !is_prime(p)) throw DomainError("p-adic scalar needs a prime, got " + std::to_string(p));
  if (rel_precision < 1) throw DomainError("relative precision must be positive");
  if (r == 0) return zero(p, rel_precision);
  const int v = qpadic::valuation(r, p);
  return from_rational_abs(p, r, v + rel_precision);
}

PadicScalar PadicScalar::from_rational_abs(std::int64_t p, const mpq_class& r, int abs_precision) {
  if (p < 2 || !is_prime(p)) throw DomainError("p-adic scalar needs a prime, got " + std::to_string(p));
  PadicScalar out;
  out.prime_ = p;
  if (r == 0) return zero(p, abs_precision);
  mpz_class num = r.get_num();
  mpz_class den = r.get_den();
  const int vn = qpadic::valuation(num, p);
  const int vd = qpadic::valuation(den, p);
  num /= prime_power(p, vn);
  den /= prime_power(p, vd);
  const int v = vn - vd;
  const int rel = abs_precision - v;
  if (rel <= 0) return zero(p, abs_precision);
  const mpz_class& m = prime_power(p, rel);
  out.zero_ = false;
  out.val_ = v;
  out.rel_ = rel;
  out.unit_ = mod(num * inverse_mod(den, m), m);
  return out;
}

PadicScalar PadicScalar::from_parts(std::int64_t p, int valuation, const mpz_class& unit, int rel_precision) {
  PadicScalar out;
  out.prime_ = p;
  out.normalize(unit, valuation, valuation + rel_precision);
  return out;
}

void PadicScalar::check_prime(const PadicScalar& o) const {
  if (prime_ != o.prime_) {
    throw DomainError("prime mismatch: " + std::to_string(prime_) + " vs " + std::to_string(o.prime_));
  }
}

// Sets *this to x * p^v known modulo p^abs_precision.
void PadicScalar::normalize(mpz_class x, int v, int abs_precision) {
  abs_precision = clamp_precision(abs_precision);
  const int rel = abs_precision - v;
  if (rel <= 0 || x == 0) {
    zero_ = true;
    abs_ = abs_precision;
    unit_ = 0;
    val_ = rel_ = 0;
    return;
  }
  const mpz_class& m = prime_power(prime_, rel);
  x = mod(x, m);
  if (x == 0) {
    zero_ = true;
    abs_ = abs_precision;
    unit_ = 0;
    val_ = rel_ = 0;
    return;
  }
  const int k = qpadic::valuation(x, prime_);
  x /= prime_power(prime_, k);
  zero_ = false;
  val_ = v + k;
  rel_ = rel - k;
  unit_ = mod(x, prime_power(prime_, rel_));
}

PadicScalar PadicScalar::operator-() const {
  PadicScalar out = *this;
  if (!zero_) out.unit_ = mod(mpz_class(-unit_), prime_power(prime_, rel_));
  return out;
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& o) {
  check_prime(o);
  const int n = std::min(abs_precision(), o.abs_precision());
  if (o.zero_) return *this = with_abs_precision(n);
  if (zero_) return *this = o.with_abs_precision(n);
  const int m = std::min(val_, o.val_);
  if (n <= m) return *this = zero(prime_, n);
  mpz_class x = unit_ * prime_power(prime_, val_ - m) + o.unit_ * prime_power(prime_, o.val_ - m);
  normalize(std::move(x), m, n);
  return *this;
}

PadicScalar& PadicScalar::operator-=(const PadicScalar& o) { return *this += -o; }

PadicScalar& PadicScalar::operator*=(const PadicScalar& o) {
  check_prime(o);
  if (zero_ && o.zero_) return *this = zero(prime_, clamp_precision(static_cast<long>(abs_) + o.abs_));
  if (zero_) return *this = zero(prime_, clamp_precision(static_cast<long>(abs_) + o.val_));
  if (o.zero_) return *this = zero(prime_, clamp_precision(static_cast<long>(o.abs_) + val_));
  const int rel = std::min(rel_, o.rel_);
  const int v = val_ + o.val_;
  normalize(unit_ * o.unit_, v, v + rel);
  return *this;
}

PadicScalar& PadicScalar::operator/=(const PadicScalar& o) {
  check_prime(o);
  if (o.zero_) {
    throw PrecisionError("division by a value indistinguishable from zero modulo " + std::to_string(prime_) +
                         "^" + std::to_string(o.abs_));
  }
  if (zero_) return *this = zero(prime_, clamp_precision(static_cast<long>(abs_) - o.val_));
  const int rel = std::min(rel_, o.rel_);
  const int v = val_ - o.val_;
  const mpz_class& m = prime_power(prime_, rel);
  normalize(unit_ * inverse_mod(o.unit_, m), v, v + rel);
  return *this;
}

PadicScalar operator+(const PadicScalar& a, const mpq_class& r) {
  if (r == 0) return a;
  if (a.abs_precision() >= PadicScalar::kExact) {
    throw DomainError("cannot add a rational to an exact zero without a precision");
  }
  return a + PadicScalar::from_rational_abs(a.prime(), r, a.abs_precision());
}

PadicScalar operator-(const PadicScalar& a, const mpq_class& r) { return a + mpq_class(-r); }

PadicScalar operator-(const mpq_class& r, const PadicScalar& a) { return (-a) + r; }

PadicScalar operator*(const PadicScalar& a, const mpq_class& r) {
  if (r == 0) return PadicScalar::zero(a.prime(), a.abs_precision());
  if (a.is_zero()) return PadicScalar::zero(a.prime(), clamp_precision(static_cast<long>(a.abs_precision()) + valuation(r, a.prime())));
  return a * PadicScalar::from_rational(a.prime(), r, a.rel_precision());
}

PadicScalar operator/(const PadicScalar& a, const mpq_class& r) {
  if (r == 0) throw DomainError("division by exact zero");
  if (a.is_zero()) return PadicScalar::zero(a.prime(), clamp_precision(static_cast<long>(a.abs_precision()) - valuation(r, a.prime())));
  return a / PadicScalar::from_rational(a.prime(), r, a.rel_precision());
}

PadicScalar PadicScalar::pow(long e) const {
  if (e == 0) return one(prime_, zero_ ? 1 : rel_);
  if (e < 0) return inverse().pow(-e);
  PadicScalar base = *this;
  PadicScalar acc;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

PadicScalar PadicScalar::inverse() const { return one(prime_, zero_ ? 1 : rel_) / *this; }

PadicScalar PadicScalar::with_abs_precision(int abs_precision) const {
  if (abs_precision >= this->abs_precision()) return *this;
  PadicScalar out;
  out.prime_ = prime_;
  if (zero_) return zero(prime_, abs_precision);
  out.normalize(unit_, val_, abs_precision);
  return out;
}

PadicScalar PadicScalar::lifted(int abs_precision) const {
  if (zero_) return zero(prime_, abs_precision);
  PadicScalar out;
  out.prime_ = prime_;
  out.normalize(unit_, val_, abs_precision);
  return out;
}

mpq_class PadicScalar::representative() const {
  if (zero_) return 0;
  mpq_class r(unit_);
  if (val_ >= 0) {
    r *= mpq_class(prime_power(prime_, val_));
  } else {
    r /= mpq_class(prime_power(prime_, -val_));
  }
  r.canonicalize();
  return r;
}

mpz_class PadicScalar::residue(int n) const {
  if (n > abs_precision()) throw PrecisionError("residue requested beyond known precision");
  if (zero_ || val_ >= n) return 0;
  if (val_ < 0) throw DomainError("residue of a non-integral p-adic number");
  return mod(mpz_class(unit_ * prime_power(prime_, val_)), prime_power(prime_, n));
}

int PadicScalar::difference_valuation(const PadicScalar& o) const {
  const PadicScalar d = *this - o;
  return d.valuation();
}

std::string PadicScalar::to_digits() const {
  std::ostringstream os;
  const int n = abs_precision();
  const long p = static_cast<long>(prime_);
  if (zero_) {
    if (n >= kExact) return "0";
    os << "O(" << p << "^" << n << ")";
    return os.str();
  }
  const int start = std::min(0, val_);
  if (start != 0) os << "(" << p << "^" << start << ") ";
  mpz_class u = unit_;
  for (int e = start; e < n; ++e) {
    if (e < val_) {
      os << "0 ";
      continue;
    }
    mpz_class d = mod(u, mpz_class(p));
    u = (u - d) / p;
    os << d.get_str() << " ";
  }
  os << "O(" << p << "^" << n << ")";
  return os.str();
}

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << prime_ << "^" << abs_ << ")";
    return os.str();
  }
  os << prime_ << "^" << val_ << " * " << unit_.get_str() << " + O(" << prime_ << "^" << abs_precision() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.to_string(); }

}  // namespace qpadic
