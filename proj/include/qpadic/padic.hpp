#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qpadic {

/// An element of Q_p known to finite precision.
///
/// A nonzero value is p^valuation * unit with the unit a residue modulo
/// p^rel_precision coprime to p; the value is therefore known modulo
/// p^(valuation + rel_precision). A value that is zero modulo p^N (for the
/// available N) is represented by an explicit zero marker carrying N, so
/// "indistinguishable from zero" is a first-class state. Every arithmetic
/// operation returns the precision it can guarantee from the precision of its
/// inputs: sums keep the smaller absolute precision, products and quotients
/// the smaller relative precision.
class PadicScalar {
 public:
  /// Precision used for exact zeros; large enough never to be the minimum.
  static constexpr int kExact = 1 << 28;

  PadicScalar() = default;

  static PadicScalar zero(std::int64_t p, int abs_precision = kExact);
  static PadicScalar one(std::int64_t p, int rel_precision);
  static PadicScalar from_integer(std::int64_t p, const mpz_class& n, int rel_precision);
  static PadicScalar from_rational(std::int64_t p, const mpq_class& r, int rel_precision);
  /// r known modulo p^abs_precision.
  static PadicScalar from_rational_abs(std::int64_t p, const mpq_class& r, int abs_precision);
  static PadicScalar from_parts(std::int64_t p, int valuation, const mpz_class& unit, int rel_precision);

  std::int64_t prime() const { return prime_; }
  bool is_zero() const { return zero_; }
  /// Exact valuation; for the zero marker this is the absolute precision
  /// (a lower bound on the true valuation).
  int valuation() const { return zero_ ? abs_ : val_; }
  int abs_precision() const { return zero_ ? abs_ : val_ + rel_; }
  int rel_precision() const { return zero_ ? 0 : rel_; }
  const mpz_class& unit() const { return unit_; }

  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& o);
  PadicScalar& operator-=(const PadicScalar& o);
  PadicScalar& operator*=(const PadicScalar& o);
  PadicScalar& operator/=(const PadicScalar& o);

  friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
  friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
  friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }
  friend PadicScalar operator/(PadicScalar a, const PadicScalar& b) { return a /= b; }

  // Mixed arithmetic with exact integers and rationals. The exact operand
  // never limits the precision of the result.
  friend PadicScalar operator+(const PadicScalar& a, const mpq_class& r);
  friend PadicScalar operator-(const PadicScalar& a, const mpq_class& r);
  friend PadicScalar operator-(const mpq_class& r, const PadicScalar& a);
  friend PadicScalar operator*(const PadicScalar& a, const mpq_class& r);
  friend PadicScalar operator/(const PadicScalar& a, const mpq_class& r);
  friend PadicScalar operator+(const mpq_class& r, const PadicScalar& a) { return a + r; }
  friend PadicScalar operator*(const mpq_class& r, const PadicScalar& a) { return a * r; }
  friend PadicScalar operator+(const PadicScalar& a, long n) { return a + mpq_class(n); }
  friend PadicScalar operator-(const PadicScalar& a, long n) { return a - mpq_class(n); }
  friend PadicScalar operator-(long n, const PadicScalar& a) { return mpq_class(n) - a; }
  friend PadicScalar operator*(const PadicScalar& a, long n) { return a * mpq_class(n); }
  friend PadicScalar operator*(long n, const PadicScalar& a) { return a * mpq_class(n); }
  friend PadicScalar operator/(const PadicScalar& a, long n) { return a / mpq_class(n); }
  friend PadicScalar operator+(long n, const PadicScalar& a) { return a + mpq_class(n); }

  PadicScalar pow(long e) const;
  PadicScalar inverse() const;

  /// Drops precision to at most abs_precision (never raises it).
  PadicScalar with_abs_precision(int abs_precision) const;
  /// Treats the stored representative as exact and re-expresses it with the
  /// given absolute precision. Only sound inside routines that account for
  /// the error separately.
  PadicScalar lifted(int abs_precision) const;

  /// The stored representative p^v * unit as a rational number.
  mpq_class representative() const;
  /// Residue modulo p^n of a value with non-negative valuation;
  /// n must not exceed the absolute precision.
  mpz_class residue(int n) const;

  /// Lower bound on v_p(this - o) certified by both precisions.
  int difference_valuation(const PadicScalar& o) const;
  /// True when this and o agree modulo p^n.
  bool agrees_with(const PadicScalar& o, int n) const { return difference_valuation(o) >= n; }

  /// Base-p digits, least significant first, followed by the O(p^N) term.
  std::string to_digits() const;
  std::string to_string() const;

 private:
  void normalize(mpz_class x, int v, int abs_precision);
  void check_prime(const PadicScalar& o) const;

  std::int64_t prime_ = 0;
  bool zero_ = true;
  int val_ = 0;
  int rel_ = 0;
  int abs_ = kExact;  // only meaningful for the zero marker
  mpz_class unit_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

}  // namespace qpadic
