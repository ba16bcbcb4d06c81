#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "qpadic/polynomial.hpp"

namespace qpadic {

/// Element of Q(q) whose denominator is c * q^k * prod Phi_d(q)^e_d.
///
/// Every denominator that arises from q-Bernoulli recursions, q-brackets and
/// powers of q has this shape, and keeping it factored makes reduction a
/// sequence of cheap divisibility tests. The form is canonical: the
/// numerator is coprime to every factor listed, c > 0 and
/// gcd(content(num), c) = 1, so equality is structural.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : RationalFunction(mpq_class(c)) {}
  RationalFunction(const mpq_class& c);
  explicit RationalFunction(IntPoly num);

  /// num / (c q^k prod Phi_d^e_d), reduced.
  static RationalFunction from_parts(IntPoly num, mpz_class c, int k, std::map<std::int64_t, int> phi);
  static RationalFunction q_power(long k);
  /// [n]_q for any integer n (negative n gives -q^n [-n]_q).
  static RationalFunction bracket(long n);
  /// q^n - 1.
  static RationalFunction q_pow_minus_one(long n);

  const IntPoly& numerator() const { return num_; }
  const mpz_class& den_constant() const { return den_c_; }
  int den_q_power() const { return den_x_; }
  const std::map<std::int64_t, int>& den_cyclotomic() const { return den_phi_; }
  /// Expanded denominator polynomial.
  IntPoly denominator() const;

  bool is_zero() const { return num_.empty(); }
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator*=(const mpq_class& c);
  /// Division; the divisor's numerator must split into q-powers and
  /// cyclotomic factors (true for everything built from brackets).
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  RationalFunction pow(long e) const;
  RationalFunction inverse() const;
  /// f(q^g).
  RationalFunction substitute_power(int g) const;

  /// Exact value at a rational point (must not hit a pole).
  mpq_class evaluate(const mpq_class& q) const;
  std::complex<long double> evaluate(std::complex<long double> q) const;

  std::string to_string() const;

 private:
  void normalize();

  IntPoly num_;
  mpz_class den_c_ = 1;
  int den_x_ = 0;
  std::map<std::int64_t, int> den_phi_;
};

/// Formal value a(q) + b(q) * mu with mu = 1 / log q.
///
/// All q-Bernoulli quantities are linear in the single transcendental mu, so
/// products of two scalars that both carry mu are rejected.
class ExactQScalar {
 public:
  ExactQScalar() = default;
  ExactQScalar(RationalFunction rational, RationalFunction mu = {})
      : rat_(std::move(rational)), mu_(std::move(mu)) {}
  ExactQScalar(long c) : rat_(c) {}

  static ExactQScalar mu_times(RationalFunction b) { return ExactQScalar({}, std::move(b)); }

  const RationalFunction& rational_part() const { return rat_; }
  const RationalFunction& mu_part() const { return mu_; }
  bool is_zero() const { return rat_.is_zero() && mu_.is_zero(); }
  bool operator==(const ExactQScalar& o) const { return rat_ == o.rat_ && mu_ == o.mu_; }
  bool operator!=(const ExactQScalar& o) const { return !(*this == o); }

  ExactQScalar operator-() const { return {-rat_, -mu_}; }
  ExactQScalar& operator+=(const ExactQScalar& o);
  ExactQScalar& operator-=(const ExactQScalar& o);
  ExactQScalar& operator*=(const RationalFunction& c);
  ExactQScalar& operator*=(const ExactQScalar& o);
  ExactQScalar& operator/=(const RationalFunction& c);

  friend ExactQScalar operator+(ExactQScalar a, const ExactQScalar& b) { return a += b; }
  friend ExactQScalar operator-(ExactQScalar a, const ExactQScalar& b) { return a -= b; }
  friend ExactQScalar operator*(ExactQScalar a, const RationalFunction& c) { return a *= c; }
  friend ExactQScalar operator*(const RationalFunction& c, ExactQScalar a) { return a *= c; }
  friend ExactQScalar operator*(ExactQScalar a, const ExactQScalar& b) { return a *= b; }
  friend ExactQScalar operator/(ExactQScalar a, const RationalFunction& c) { return a /= c; }

  /// Value as a function of q^g; mu for base q^g is mu / g.
  ExactQScalar substitute_power(int g) const;

  /// Exact a(q) and b(q) at a rational q.
  std::pair<mpq_class, mpq_class> evaluate_parts(const mpq_class& q) const;
  /// Complex value with mu = 1 / Log q (principal branch).
  std::complex<long double> evaluate(std::complex<long double> q) const;

  std::string to_string() const;

 private:
  RationalFunction rat_;
  RationalFunction mu_;
};

}  // namespace qpadic
