#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qpadic/padic.hpp"

namespace qpadic {

/// Element of Z_p[X]/(Phi_m(X)) with p not dividing m, i.e. of the
/// unramified extension generated by an m-th root of unity. Order 1 (and 2)
/// is Z_p itself. Coefficients carry their own precision.
class CycloScalar {
 public:
  CycloScalar() = default;

  static CycloScalar zero(std::int64_t order, std::int64_t p);
  static CycloScalar constant(std::int64_t order, const PadicScalar& c);
  /// X^k, with X of multiplicative order exactly `order`.
  static CycloScalar generator_power(std::int64_t order, std::int64_t p, long k, int precision);

  std::int64_t order() const { return order_; }
  std::int64_t prime() const { return prime_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const PadicScalar& coefficient(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<PadicScalar>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Minimum coefficient valuation.
  int valuation() const;
  int abs_precision() const;
  /// True when the element lies in Z_p (all higher coefficients vanish).
  bool is_scalar() const;
  PadicScalar scalar_part() const { return coeffs_.front(); }

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator*=(const PadicScalar& c);
  CycloScalar& operator/=(const PadicScalar& c);

  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator*(CycloScalar a, const PadicScalar& c) { return a *= c; }
  friend CycloScalar operator*(const PadicScalar& c, CycloScalar a) { return a *= c; }
  friend CycloScalar operator/(CycloScalar a, const PadicScalar& c) { return a /= c; }
  friend CycloScalar operator+(CycloScalar a, const PadicScalar& c) { return a += constant(a.order(), c); }

  CycloScalar pow(long e) const;
  CycloScalar with_abs_precision(int n) const;

  /// Lower bound on the valuation of this - o.
  int difference_valuation(const CycloScalar& o) const;

  /// Coefficient digit strings, constant term first.
  std::vector<std::string> to_digit_strings() const;
  std::string to_string() const;

 private:
  void check_compatible(const CycloScalar& o) const;

  std::int64_t order_ = 1;
  std::int64_t prime_ = 0;
  std::vector<PadicScalar> coeffs_;
};

}  // namespace qpadic
