#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "qpadic/padic.hpp"

namespace qpadic {

/// A p-adic q given by an exact rational in the disk v(q - 1) >= 1
/// (>= 2 for p = 2), together with log_p q. Exact integer powers and
/// brackets are produced with `precision` relative digits; powers with
/// p-adic exponents go through exp/log.
class PadicQ {
 public:
  PadicQ(std::int64_t p, const mpq_class& q, int precision);

  std::int64_t prime() const { return p_; }
  const mpq_class& rational() const { return q_; }
  int precision() const { return precision_; }
  /// v_p(q - 1).
  int shift_valuation() const { return v_; }

  const PadicScalar& q() const { return qp_; }
  const PadicScalar& log_q() const { return log_; }

  PadicScalar pow(long n) const;
  PadicScalar pow(const PadicScalar& x) const;
  PadicScalar bracket(long n) const;
  PadicScalar bracket(const PadicScalar& x) const;

  /// The parameter q^g (log taken as g log q).
  PadicQ power_base(long g) const;
  /// Same q at another working precision.
  PadicQ with_precision(int precision) const;

 private:
  PadicQ() = default;

  std::int64_t p_ = 0;
  mpq_class q_;
  int precision_ = 0;
  int v_ = 0;
  PadicScalar qp_;
  PadicScalar log_;
};

/// q as supplied by a user: an exact rational, optionally read p-adically.
struct QParameter {
  mpq_class value;
  std::optional<std::int64_t> prime;  // set for p-adic use

  bool is_classical() const { return value == 1; }

  /// Parses "a/b", "a", or "1+p^k" (also "1+5^3"-style with an explicit base).
  static QParameter parse(const std::string& text, std::optional<std::int64_t> p);
  /// Checks the p-adic disk condition; q = 1 only when allow_classical.
  void validate_padic(bool allow_classical) const;
  PadicQ padic(int precision) const;
  std::string to_string() const;
};

/// Exact integer power of a rational q.
mpq_class qpow(const mpq_class& q, long n);
/// [n]_q for integer n (q = 1 gives n).
mpq_class qbracket(const mpq_class& q, long n);

/// <a + p* t> = w(a)^(-1) [a + p* t]_q.
PadicScalar angle_bracket(long a, const PadicQ& q, const PadicScalar& t);

}  // namespace qpadic
