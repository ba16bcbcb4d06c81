#include "qpadic/qparam.hpp"

#include <regex>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/padic_functions.hpp"

namespace qpadic {

PadicQ::PadicQ(std::int64_t p, const mpq_class& q, int precision) : p_(p), q_(q), precision_(precision) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  if (precision < 1) throw DomainError("precision must be positive");
  if (q == 1) throw DomainError("q = 1 is only allowed on the classical path");
  if (q == 0) throw DomainError("q = 0 is not in the p-adic disk");
  v_ = valuation(mpq_class(q - 1), p);
  if (v_ < unit_disk_valuation(p)) {
    throw DomainError("q = " + q.get_str() + " is outside the disk v(q-1) >= " +
                      std::to_string(unit_disk_valuation(p)) + " for p = " + std::to_string(p));
  }
  qp_ = PadicScalar::from_rational(p, q, precision);
  log_ = plog(qp_);
}

PadicScalar PadicQ::pow(long n) const { return PadicScalar::from_rational(p_, qpow(q_, n), precision_); }

PadicScalar PadicQ::pow(const PadicScalar& x) const {
  if (x.abs_precision() >= PadicScalar::kExact) return PadicScalar::one(p_, precision_);
  return pexp(x * log_);
}

PadicScalar PadicQ::bracket(long n) const {
  return PadicScalar::from_rational(p_, qbracket(q_, n), precision_);
}

PadicScalar PadicQ::bracket(const PadicScalar& x) const {
  if (x.abs_precision() >= PadicScalar::kExact) return PadicScalar::zero(p_, precision_);
  return (1 - pow(x)) / mpq_class(1 - q_);
}

PadicQ PadicQ::power_base(long g) const {
  if (g < 1) throw DomainError("power_base: exponent must be positive");
  PadicQ r;
  r.p_ = p_;
  r.q_ = qpow(q_, g);
  r.precision_ = precision_;
  r.v_ = v_ + valuation(static_cast<std::int64_t>(g), p_);
  r.qp_ = PadicScalar::from_rational(p_, r.q_, precision_);
  r.log_ = log_ * mpq_class(g);
  return r;
}

PadicQ PadicQ::with_precision(int precision) const { return PadicQ(p_, q_, precision); }

mpq_class qpow(const mpq_class& q, long n) {
  mpq_class r;
  mpz_class num, den;
  const unsigned long e = static_cast<unsigned long>(n < 0 ? -n : n);
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  if (n >= 0) {
    r = mpq_class(num, den);
  } else {
    if (q == 0) throw DomainError("negative power of zero");
    r = mpq_class(den, num);
  }
  r.canonicalize();
  return r;
}

mpq_class qbracket(const mpq_class& q, long n) {
  if (q == 1) return n;
  mpq_class r = (1 - qpow(q, n)) / (1 - q);
  r.canonicalize();
  return r;
}

PadicScalar angle_bracket(long a, const PadicQ& q, const PadicScalar& t) {
  const std::int64_t p = q.prime();
  if (mod(static_cast<std::int64_t>(a), p) == 0) throw DomainError("angle bracket needs a coprime to p");
  if (t.valuation() < 0) throw DomainError("angle bracket needs |t|_p <= 1");
  const PadicScalar w = teichmuller(a, p, q.precision());
  if (t.abs_precision() >= PadicScalar::kExact) return q.bracket(a) / w;
  const PadicScalar y = t * mpq_class(p_star(p)) + mpq_class(a);
  return q.bracket(y) / w;
}

namespace {

mpq_class parse_rational(const std::string& s) {
  static const std::regex decimal(R"(^([+-]?)(\d*)\.(\d+)$)");
  std::smatch m;
  if (std::regex_match(s, m, decimal)) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class num(digits.empty() ? "0" : digits);
    mpz_class den = 1;
    for (std::size_t i = 0; i < m[3].str().size(); ++i) den *= 10;
    mpq_class r(num, den);
    r.canonicalize();
    if (m[1] == "-") r = -r;
    return r;
  }
  mpq_class r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("cannot parse rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace

QParameter QParameter::parse(const std::string& text, std::optional<std::int64_t> p) {
  static const std::regex shorthand(R"(^1\+(p|\d+)(\^(\d+))?$)");
  std::smatch m;
  QParameter out;
  out.prime = p;
  if (std::regex_match(text, m, shorthand)) {
    std::int64_t base = 0;
    if (m[1] == "p") {
      if (!p) throw DomainError("q shorthand 1+p^k needs a prime");
      base = *p;
    } else {
      base = std::stoll(m[1].str());
    }
    const int k = m[3].matched ? std::stoi(m[3].str()) : 1;
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(k));
    out.value = mpq_class(pw + 1);
    return out;
  }
  out.value = parse_rational(text);
  return out;
}

void QParameter::validate_padic(bool allow_classical) const {
  if (!prime) throw DomainError("p-adic q needs a prime");
  if (value == 1) {
    if (!allow_classical) throw DomainError("q = 1 is only allowed on the classical path");
    return;
  }
  if (value == 0 || valuation(mpq_class(value - 1), *prime) < unit_disk_valuation(*prime)) {
    throw DomainError("q = " + value.get_str() + " is outside the disk for p = " + std::to_string(*prime));
  }
}

PadicQ QParameter::padic(int precision) const {
  validate_padic(false);
  return PadicQ(*prime, value, precision);
}

std::string QParameter::to_string() const { return value.get_str(); }

}  // namespace qpadic
