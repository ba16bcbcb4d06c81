#include "qpadic/rational_function.hpp"

#include <sstream>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"

namespace qpadic {
namespace {

IntPoly factor_product(const std::map<std::int64_t, int>& have, const std::map<std::int64_t, int>& want) {
  IntPoly r{mpz_class(1)};
  for (auto [d, e] : want) {
    auto it = have.find(d);
    const int missing = e - (it == have.end() ? 0 : it->second);
    for (int i = 0; i < missing; ++i) r = poly::mul(r, cyclotomic(d));
  }
  return r;
}

std::string poly_string(const IntPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    mpz_class c = a[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    first = false;
    if (i == 0 || c != 1) os << c.get_str();
    if (i > 0 && c != 1) os << "*";
    if (i == 1) os << "q";
    if (i > 1) os << "q^" << i;
  }
  return os.str();
}

template <class T>
T horner(const IntPoly& a, const T& x) {
  T r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + T(static_cast<long double>(a[i].get_d()));
  return r;
}

}  // namespace

RationalFunction::RationalFunction(const mpq_class& c) {
  mpq_class r = c;
  r.canonicalize();
  if (r != 0) num_ = {r.get_num()};
  den_c_ = r.get_den();
}

RationalFunction::RationalFunction(IntPoly num) : num_(std::move(num)) {
  poly::trim(num_);
  normalize();
}

RationalFunction RationalFunction::from_parts(IntPoly num, mpz_class c, int k, std::map<std::int64_t, int> phi) {
  if (c == 0) throw DomainError("zero denominator");
  RationalFunction r;
  r.num_ = std::move(num);
  poly::trim(r.num_);
  if (c < 0) {
    c = -c;
    for (auto& x : r.num_) x = -x;
  }
  r.den_c_ = std::move(c);
  r.den_x_ = k;
  for (auto [d, e] : phi) {
    if (e > 0) r.den_phi_[d] = e;
  }
  r.normalize();
  return r;
}

RationalFunction RationalFunction::q_power(long k) {
  RationalFunction r(1);
  if (k >= 0) {
    r.num_ = poly::shift({mpz_class(1)}, static_cast<int>(k));
  } else {
    r.den_x_ = static_cast<int>(-k);
  }
  return r;
}

RationalFunction RationalFunction::bracket(long n) {
  if (n >= 0) return RationalFunction(poly::bracket(static_cast<int>(n)));
  return -(q_power(n) * RationalFunction(poly::bracket(static_cast<int>(-n))));
}

RationalFunction RationalFunction::q_pow_minus_one(long n) {
  if (n >= 0) return RationalFunction(poly::x_pow_minus_one(static_cast<int>(n)));
  return -(q_power(n) * RationalFunction(poly::x_pow_minus_one(static_cast<int>(-n))));
}

IntPoly RationalFunction::denominator() const {
  IntPoly r = poly::shift({den_c_}, den_x_);
  return poly::mul(r, factor_product({}, den_phi_));
}

void RationalFunction::normalize() {
  if (num_.empty()) {
    den_c_ = 1;
    den_x_ = 0;
    den_phi_.clear();
    return;
  }
  if (den_x_ > 0) {
    int low = 0;
    while (num_[static_cast<std::size_t>(low)] == 0) ++low;
    const int k = std::min(low, den_x_);
    if (k > 0) {
      num_.erase(num_.begin(), num_.begin() + k);
      den_x_ -= k;
    }
  }
  for (auto it = den_phi_.begin(); it != den_phi_.end();) {
    while (it->second > 0 && divisible_by_cyclotomic(num_, it->first)) {
      num_ = poly::divexact_monic(num_, cyclotomic(it->first));
      --it->second;
    }
    if (it->second == 0) it = den_phi_.erase(it);
    else ++it;
  }
  mpz_class g;
  const mpz_class c = poly::content(num_);
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den_c_.get_mpz_t());
  if (g != 1) {
    poly::divexact_scalar(num_, g);
    den_c_ /= g;
  }
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_c_ == o.den_c_ && den_x_ == o.den_x_ && den_phi_ == o.den_phi_;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), den_c_.get_mpz_t(), o.den_c_.get_mpz_t());
  const int x = std::max(den_x_, o.den_x_);
  std::map<std::int64_t, int> phi = den_phi_;
  for (auto [d, e] : o.den_phi_) phi[d] = std::max(phi[d], e);
  IntPoly a = poly::shift(poly::scale(num_, l / den_c_), x - den_x_);
  IntPoly b = poly::shift(poly::scale(o.num_, l / o.den_c_), x - o.den_x_);
  if (phi != den_phi_) a = poly::mul(a, factor_product(den_phi_, phi));
  if (phi != o.den_phi_) b = poly::mul(b, factor_product(o.den_phi_, phi));
  num_ = poly::add(a, b);
  den_c_ = l;
  den_x_ = x;
  den_phi_ = std::move(phi);
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  num_ = poly::mul(num_, o.num_);
  den_c_ *= o.den_c_;
  den_x_ += o.den_x_;
  for (auto [d, e] : o.den_phi_) den_phi_[d] += e;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const mpq_class& c) { return *this *= RationalFunction(c); }

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by the zero rational function");
  // Split the numerator as sign * c * q^j * prod Phi_d^e.
  IntPoly r = num_;
  int j = 0;
  while (r[static_cast<std::size_t>(j)] == 0) ++j;
  r.erase(r.begin(), r.begin() + j);
  mpz_class c = poly::content(r);
  if (r.back() < 0) c = -c;
  poly::divexact_scalar(r, c);
  if (abs(r.back()) != 1) throw DomainError("inverse: numerator is not a product of cyclotomic factors");
  std::map<std::int64_t, int> phi;
  const int deg0 = poly::degree(r);
  const std::int64_t bound = 2 * static_cast<std::int64_t>(deg0) * deg0 + 2;
  for (std::int64_t d = 1; poly::degree(r) > 0; ++d) {
    if (d > bound) throw DomainError("inverse: numerator is not a product of cyclotomic factors");
    if (euler_phi(d) > poly::degree(r)) continue;
    while (poly::degree(r) > 0 && divisible_by_cyclotomic(r, d)) {
      r = poly::divexact_monic(r, cyclotomic(d));
      ++phi[d];
    }
  }
  // r is now +-1
  if (r[0] < 0) c = -c;
  RationalFunction out;
  out.num_ = poly::scale(poly::shift({den_c_}, den_x_), c < 0 ? mpz_class(-1) : mpz_class(1));
  out.num_ = poly::mul(out.num_, factor_product({}, den_phi_));
  out.den_c_ = abs(c);
  out.den_x_ = j;
  out.den_phi_ = std::move(phi);
  out.normalize();
  return out;
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(1);
  RationalFunction b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return r;
}

RationalFunction RationalFunction::substitute_power(int g) const {
  if (g < 1) throw DomainError("substitute_power: exponent must be positive");
  if (g == 1 || is_zero()) return *this;
  RationalFunction r;
  r.num_ = poly::substitute_power(num_, g);
  r.den_c_ = den_c_;
  r.den_x_ = den_x_ * g;
  for (auto [d, e] : den_phi_) {
    // Phi_d(x^g) = prod of Phi_d'(x) over d' | dg with d' / gcd(d', g) = d
    for (std::int64_t dp : divisors(d * g)) {
      if (dp / gcd(dp, g) == d) r.den_phi_[dp] += e;
    }
  }
  return r;
}

mpq_class RationalFunction::evaluate(const mpq_class& q) const {
  mpq_class den = den_c_;
  for (int i = 0; i < den_x_; ++i) den *= q;
  for (auto [d, e] : den_phi_) {
    const mpq_class v = poly::evaluate(cyclotomic(d), q);
    for (int i = 0; i < e; ++i) den *= v;
  }
  if (den == 0) throw DomainError("rational function evaluated at a pole");
  mpq_class r = poly::evaluate(num_, q) / den;
  r.canonicalize();
  return r;
}

std::complex<long double> RationalFunction::evaluate(std::complex<long double> q) const {
  using C = std::complex<long double>;
  C den = static_cast<long double>(den_c_.get_d());
  for (int i = 0; i < den_x_; ++i) den *= q;
  for (auto [d, e] : den_phi_) {
    const C v = horner<C>(cyclotomic(d), q);
    for (int i = 0; i < e; ++i) den *= v;
  }
  if (std::abs(den) == 0) throw DomainError("rational function evaluated at a pole");
  return horner<C>(num_, q) / den;
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(" << poly_string(num_) << ")";
  const bool trivial_den = den_c_ == 1 && den_x_ == 0 && den_phi_.empty();
  if (trivial_den) return os.str();
  os << "/(";
  bool first = true;
  if (den_c_ != 1) {
    os << den_c_.get_str();
    first = false;
  }
  if (den_x_ > 0) {
    os << (first ? "" : "*") << "q";
    if (den_x_ > 1) os << "^" << den_x_;
    first = false;
  }
  for (auto [d, e] : den_phi_) {
    os << (first ? "" : "*") << "Phi" << d;
    if (e > 1) os << "^" << e;
    first = false;
  }
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

ExactQScalar& ExactQScalar::operator+=(const ExactQScalar& o) {
  rat_ += o.rat_;
  mu_ += o.mu_;
  return *this;
}

ExactQScalar& ExactQScalar::operator-=(const ExactQScalar& o) {
  rat_ -= o.rat_;
  mu_ -= o.mu_;
  return *this;
}

ExactQScalar& ExactQScalar::operator*=(const RationalFunction& c) {
  rat_ *= c;
  mu_ *= c;
  return *this;
}

ExactQScalar& ExactQScalar::operator*=(const ExactQScalar& o) {
  if (!mu_.is_zero() && !o.mu_.is_zero()) {
    throw std::logic_error("product of two scalars that both carry 1/log q");
  }
  RationalFunction mu = rat_ * o.mu_ + mu_ * o.rat_;
  rat_ *= o.rat_;
  mu_ = std::move(mu);
  return *this;
}

ExactQScalar& ExactQScalar::operator/=(const RationalFunction& c) {
  const RationalFunction inv = c.inverse();
  return *this *= inv;
}

ExactQScalar ExactQScalar::substitute_power(int g) const {
  RationalFunction mu = mu_.substitute_power(g);
  mu *= mpq_class(1, g);
  return {rat_.substitute_power(g), std::move(mu)};
}

std::pair<mpq_class, mpq_class> ExactQScalar::evaluate_parts(const mpq_class& q) const {
  return {rat_.evaluate(q), mu_.evaluate(q)};
}

std::complex<long double> ExactQScalar::evaluate(std::complex<long double> q) const {
  if (mu_.is_zero()) return rat_.evaluate(q);
  return rat_.evaluate(q) + mu_.evaluate(q) / std::log(q);
}

std::string ExactQScalar::to_string() const {
  if (mu_.is_zero()) return rat_.to_string();
  if (rat_.is_zero()) return mu_.to_string() + "*mu";
  return rat_.to_string() + " + " + mu_.to_string() + "*mu";
}

}  // namespace qpadic
