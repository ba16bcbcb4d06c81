#include "qpadic/cyclo.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/polynomial.hpp"

namespace qpadic {
namespace {

void check_order(std::int64_t order, std::int64_t p) {
  if (order < 1) throw DomainError("cyclotomic ring order must be positive");
  if (order % p == 0) {
    throw DomainError("ramified value ring: p = " + std::to_string(p) + " divides order " + std::to_string(order));
  }
}

}  // namespace

CycloScalar CycloScalar::zero(std::int64_t order, std::int64_t p) {
  check_order(order, p);
  CycloScalar z;
  z.order_ = order;
  z.prime_ = p;
  z.coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), PadicScalar::zero(p));
  return z;
}

CycloScalar CycloScalar::constant(std::int64_t order, const PadicScalar& c) {
  CycloScalar z = zero(order, c.prime());
  z.coeffs_[0] = c;
  return z;
}

CycloScalar CycloScalar::generator_power(std::int64_t order, std::int64_t p, long k, int precision) {
  check_order(order, p);
  CycloScalar x = zero(order, p);
  const int deg = x.degree();
  if (deg == 1) {
    // Phi_1 = X - 1, Phi_2 = X + 1
    x.coeffs_[0] = PadicScalar::from_rational(p, order == 1 ? 1 : -1, precision);
  } else {
    x.coeffs_[1] = PadicScalar::one(p, precision);
    for (int i = 0; i < deg; ++i) {
      if (i != 1) x.coeffs_[static_cast<std::size_t>(i)] = PadicScalar::zero(p, precision);
    }
  }
  // X must have order exactly `order`.
  const CycloScalar one = constant(order, PadicScalar::one(p, precision));
  if (!(x.pow(order) - one).is_zero()) throw DomainError("cyclotomic generator failed X^m = 1");
  for (auto [r, e] : factorize(order)) {
    (void)e;
    if ((x.pow(order / r) - one).is_zero()) throw DomainError("cyclotomic generator has smaller order");
  }
  return x.pow(mod(static_cast<std::int64_t>(k), order));
}

void CycloScalar::check_compatible(const CycloScalar& o) const {
  if (order_ != o.order_) {
    throw DomainError("cyclotomic order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
  }
  if (prime_ != o.prime_) throw DomainError("prime mismatch in cyclotomic arithmetic");
}

bool CycloScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const PadicScalar& c) { return c.is_zero(); });
}

int CycloScalar::valuation() const {
  int v = PadicScalar::kExact;
  for (const auto& c : coeffs_) v = std::min(v, c.valuation());
  return v;
}

int CycloScalar::abs_precision() const {
  int v = PadicScalar::kExact;
  for (const auto& c : coeffs_) v = std::min(v, c.abs_precision());
  return v;
}

bool CycloScalar::is_scalar() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const PadicScalar& c) { return c.is_zero(); });
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  check_compatible(o);
  const std::size_t d = coeffs_.size();
  std::vector<PadicScalar> prod(2 * d - 1, PadicScalar::zero(prime_));
  for (std::size_t i = 0; i < d; ++i) {
    if (coeffs_[i].is_zero() && coeffs_[i].abs_precision() >= PadicScalar::kExact) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  // Reduce with X^d = -(Phi_0 + ... + Phi_{d-1} X^{d-1}).
  const IntPoly& phi = cyclotomic(order_);
  for (std::size_t k = prod.size(); k-- > d;) {
    const PadicScalar c = prod[k];
    for (std::size_t i = 0; i < d; ++i) {
      if (phi[i] == 0) continue;
      prod[k - d + i] -= c * mpq_class(phi[i]);
    }
  }
  prod.resize(d);
  coeffs_ = std::move(prod);
  return *this;
}

CycloScalar& CycloScalar::operator*=(const PadicScalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CycloScalar& CycloScalar::operator/=(const PadicScalar& c) {
  for (auto& x : coeffs_) x /= c;
  return *this;
}

CycloScalar CycloScalar::pow(long e) const {
  if (e < 0) throw DomainError("negative power in cyclotomic ring");
  if (e == 0) {
    int prec = abs_precision();
    if (prec >= PadicScalar::kExact) prec = 64;
    return constant(order_, PadicScalar::one(prime_, std::max(prec, 1)));
  }
  std::optional<CycloScalar> result;
  CycloScalar base = *this;
  while (e > 0) {
    if (e & 1) {
      if (result) *result *= base;
      else result = base;
    }
    e >>= 1;
    if (e > 0) base *= base;
  }
  return *result;
}

CycloScalar CycloScalar::with_abs_precision(int n) const {
  CycloScalar r = *this;
  for (auto& c : r.coeffs_) c = c.with_abs_precision(n);
  return r;
}

int CycloScalar::difference_valuation(const CycloScalar& o) const { return (*this - o).valuation(); }

std::vector<std::string> CycloScalar::to_digit_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.to_digits());
  return out;
}

std::string CycloScalar::to_string() const {
  if (coeffs_.size() == 1) return coeffs_[0].to_string();
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) os << " + ";
    os << "(" << coeffs_[i].to_string() << ")";
    if (i > 0) os << "*X^" << i;
  }
  return os.str();
}

}  // namespace qpadic
