#include "qpadic/qbernoulli.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <mutex>
#include <tuple>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/padic_functions.hpp"

namespace qpadic {
namespace {

struct ExactCache {
  std::mutex mu;
  std::deque<ExactQScalar> base;
  std::map<std::pair<int, int>, ExactQScalar> substituted;
};

ExactCache& exact_cache() {
  static ExactCache c;
  return c;
}

RationalFunction inverse_q_pow_minus_one(long n) {
  std::map<std::int64_t, int> phi;
  for (auto d : divisors(n)) phi[d] = 1;
  return RationalFunction::from_parts({mpz_class(1)}, 1, 0, phi);
}

RationalFunction inverse_bracket(long n) {
  std::map<std::int64_t, int> phi;
  for (auto d : divisors(n)) {
    if (d > 1) phi[d] = 1;
  }
  return RationalFunction::from_parts({mpz_class(1)}, 1, 0, phi);
}

RationalFunction bracket_power(long n, long e) {
  if (e >= 0) return RationalFunction::bracket(n).pow(e);
  if (n > 0) return inverse_bracket(n).pow(-e);
  return RationalFunction::bracket(n).pow(e);
}

int real_value(const DirichletCharacter& chi, std::int64_t a) {
  const CharValue v = chi(a);
  if (v.zero) return 0;
  const long o = v.exact_order();
  if (o > 2) throw DomainError("exact mode supports only characters with values +-1 (" + chi.label() + ")");
  return o == 1 ? 1 : -1;
}

}  // namespace

const ExactQScalar& beta_number_exact(int n, int g) {
  if (n < 0) throw DomainError("q-Bernoulli index must be non-negative");
  if (g < 1) throw DomainError("base exponent must be positive");
  auto& c = exact_cache();
  std::lock_guard<std::mutex> lock(c.mu);
  while (static_cast<int>(c.base.size()) <= n) {
    const int k = static_cast<int>(c.base.size());
    if (k == 0) {
      c.base.push_back(ExactQScalar::mu_times(RationalFunction::q_pow_minus_one(1)));
      continue;
    }
    ExactQScalar acc(k == 1 ? 1 : 0);
    for (int i = 0; i < k; ++i) {
      RationalFunction coef = RationalFunction::q_power(i);
      coef *= mpq_class(binomial(k, i));
      acc -= c.base[static_cast<std::size_t>(i)] * coef;
    }
    acc *= inverse_q_pow_minus_one(k);
    c.base.push_back(std::move(acc));
  }
  if (g == 1) return c.base[static_cast<std::size_t>(n)];
  auto key = std::make_pair(n, g);
  auto it = c.substituted.find(key);
  if (it != c.substituted.end()) return it->second;
  return c.substituted.emplace(key, c.base[static_cast<std::size_t>(n)].substitute_power(g)).first->second;
}

ExactQScalar beta_closed_form_exact(int n, ClosedFormVariant variant) {
  auto sign = [&](int i) {
    const int e = variant == ClosedFormVariant::kDisplayed ? n - i : i;
    return e % 2 == 0 ? 1 : -1;
  };
  ExactQScalar sum = ExactQScalar::mu_times(RationalFunction::q_pow_minus_one(1) * RationalFunction(sign(0)));
  for (int i = 1; i <= n; ++i) {
    // i / [i]_q = i (1 - q) / (1 - q^i)
    RationalFunction t = RationalFunction::q_pow_minus_one(1) * inverse_q_pow_minus_one(i);
    t *= mpq_class(binomial(n, i) * i * sign(i));
    sum += ExactQScalar(t);
  }
  const RationalFunction one_minus_q = -RationalFunction::q_pow_minus_one(1);
  return sum * one_minus_q.pow(-n);
}

ExactQScalar beta_poly_exact(int n, int g, long e) {
  const RationalFunction ratio = RationalFunction::bracket(e) * inverse_bracket(g);
  ExactQScalar sum;
  for (int i = 0; i <= n; ++i) {
    RationalFunction coef = RationalFunction::q_power(e * i) * ratio.pow(n - i);
    coef *= mpq_class(binomial(n, i));
    sum += beta_number_exact(i, g) * coef;
  }
  return sum;
}

ExactQScalar distribution_sum_exact(int n, const DirichletCharacter& chi, long x, int g, bool negated) {
  const DirichletCharacter prim = chi.primitive();
  const std::int64_t f = prim.conductor();
  if (g < 1 || g % f != 0) {
    throw DomainError("g = " + std::to_string(g) + " is not a multiple of the conductor " + std::to_string(f));
  }
  std::vector<int> weight(static_cast<std::size_t>(g));
  for (int a = 0; a < g; ++a) weight[static_cast<std::size_t>(a)] = real_value(prim, negated ? -a : a);

  // sum_i C(n,i) [g]^{i-1} beta_{i,q^g} P_i with P_i = sum_a chi(a) q^{y i} [y]^{n-i}, y = x +- a.
  ExactQScalar sum;
  for (int i = 0; i <= n; ++i) {
    RationalFunction p_i;
    for (int a = 0; a < g; ++a) {
      const int w = weight[static_cast<std::size_t>(a)];
      if (w == 0) continue;
      const long y = negated ? x - a : x + a;
      RationalFunction term = RationalFunction::q_power(y * i) * RationalFunction::bracket(y).pow(n - i);
      if (w < 0) term = -term;
      p_i += term;
    }
    if (p_i.is_zero()) continue;
    p_i *= bracket_power(g, i - 1);
    p_i *= mpq_class(binomial(n, i));
    sum += beta_number_exact(i, g) * p_i;
  }
  return sum;
}

ExactQScalar gen_beta_number_exact(int n, const DirichletCharacter& chi) {
  return distribution_sum_exact(n, chi, 0, static_cast<int>(chi.conductor()));
}

ExactQScalar gen_beta_poly_exact(int n, const DirichletCharacter& chi, long x) {
  ExactQScalar sum;
  for (int k = 0; k <= n; ++k) {
    RationalFunction coef = RationalFunction::q_power(k * x) * RationalFunction::bracket(x).pow(n - k);
    coef *= mpq_class(binomial(n, k));
    sum += gen_beta_number_exact(k, chi) * coef;
  }
  return sum;
}

std::pair<ExactQScalar, ExactQScalar> distribution_lemma(int n, const DirichletCharacter& chi, long x, int g,
                                                         bool negated) {
  return {gen_beta_poly_exact(n, chi, x), distribution_sum_exact(n, chi, x, g, negated)};
}

std::pair<ExactQScalar, ExactQScalar> sums_of_powers(const DirichletCharacter& chi, int n_blocks, int l) {
  if (n_blocks < 1 || l < 0) throw DomainError("sums_of_powers needs n_blocks >= 1 and l >= 0");
  const DirichletCharacter prim = chi.primitive();
  const long top = n_blocks * prim.conductor();
  RationalFunction lhs;
  for (long k = 0; k < top; ++k) {
    const int w = real_value(prim, k);
    if (w == 0) continue;
    RationalFunction t = RationalFunction::q_power(k) * RationalFunction::bracket(k).pow(l);
    lhs += w > 0 ? t : -t;
  }
  ExactQScalar rhs = gen_beta_poly_exact(l + 1, prim, top) - gen_beta_number_exact(l + 1, prim);
  rhs *= RationalFunction(mpq_class(1, l + 1));
  return {ExactQScalar(lhs), rhs};
}

// ---------------------------------------------------------------------------

int beta_working_precision(const PadicQ& q, int g, int n, int target) {
  const std::int64_t p = q.prime();
  const int v = q.shift_valuation() + valuation(static_cast<std::int64_t>(g), p);
  // one v for log q, one per division by Q^k - 1
  return target + (n + 1) * v + factorial_valuation(n, p) + 4;
}

const std::vector<PadicScalar>& beta_numbers_padic(const PadicQ& q, int g, int n, int target) {
  using Key = std::tuple<std::int64_t, std::string, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::vector<PadicScalar>> cache;
  const std::int64_t p = q.prime();
  Key key{p, q.rational().get_str(), g, n, target};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const int w = beta_working_precision(q, g, n, target);
  const PadicQ qw = q.with_precision(w).power_base(g);
  const mpq_class Q = qw.rational();
  std::vector<PadicScalar> b;
  b.push_back(PadicScalar::from_rational(p, Q - 1, w) / qw.log_q());
  for (int k = 1; k <= n; ++k) {
    PadicScalar acc = PadicScalar::zero(p);
    mpq_class qi = 1;
    for (int i = 0; i < k; ++i) {
      acc += b[static_cast<std::size_t>(i)] * mpq_class(binomial(k, i) * qi);
      qi *= Q;
    }
    PadicScalar num = (k == 1 ? mpq_class(1) : mpq_class(0)) - acc;
    b.push_back(num / mpq_class(qpow(Q, k) - 1));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(b)).first->second;
}

PadicScalar beta_number_padic(const PadicQ& q, int n, int target) { return beta_numbers_padic(q, 1, n, target)[static_cast<std::size_t>(n)]; }

PadicScalar beta_poly_padic(const PadicQ& q, int g, int n, const PadicScalar& q_y, const PadicScalar& bracket_y,
                            int target) {
  const auto& b = beta_numbers_padic(q, g, n, target);
  const mpq_class br_g = qbracket(q.rational(), g);
  const PadicScalar ratio = bracket_y / br_g;
  PadicScalar sum = PadicScalar::zero(q.prime());
  for (int i = 0; i <= n; ++i) {
    sum += q_y.pow(i) * b[static_cast<std::size_t>(i)] * ratio.pow(n - i) * mpq_class(binomial(n, i));
  }
  return sum;
}

TwistedCharacter::TwistedCharacter(const DirichletCharacter& chi, long n, std::int64_t p)
    : chi_(chi), twisted_(n == 0 ? chi : twist_teichmuller(chi, n, p).primitive()), n_(n), p_(p),
      ring_(value_ring_order(chi, p)) {}

bool TwistedCharacter::is_zero_at(std::int64_t a) const { return twisted_(a).zero; }

CycloScalar TwistedCharacter::value(std::int64_t a, int precision) const {
  if (n_ == 0) return embed_padic(chi_(a), ring_, p_, precision);
  if (twisted_(a).zero) return CycloScalar::zero(ring_, p_);
  const std::int64_t f = twisted_.modulus();
  const std::int64_t avoid = chi_.modulus() * p_;
  std::int64_t b = mod(a, f);
  if (b == 0) b = f;
  while (gcd(b, avoid) != 1) b += f;
  const PadicScalar w = teichmuller(b, p_, precision);
  return embed_padic(chi_(b), ring_, p_, precision) * w.pow(-n_);
}

CycloScalar gen_beta_poly_padic(const PadicQ& q, int n, const TwistedCharacter& chi, const PadicScalar& y, int target) {
  const std::int64_t p = q.prime();
  const int f = static_cast<int>(chi.conductor());
  const auto& b = beta_numbers_padic(q, f, n, target);
  const int work = beta_working_precision(q, f, n, target);
  const PadicQ qw = q.with_precision(work);
  const bool y_exact_zero = y.is_zero() && y.abs_precision() >= PadicScalar::kExact;
  const mpq_class br_f = qbracket(q.rational(), f);
  CycloScalar total = CycloScalar::zero(chi.ring_order(), p);
  for (int a = 0; a < f; ++a) {
    if (chi.is_zero_at(a)) continue;
    PadicScalar qy, by;
    if (y_exact_zero) {
      qy = qw.pow(static_cast<long>(a));
      by = qw.bracket(static_cast<long>(a));
    } else {
      const PadicScalar ya = y + mpq_class(a);
      qy = qw.pow(ya);
      by = qw.bracket(ya);
    }
    PadicScalar s = PadicScalar::zero(p);
    for (int i = 0; i <= n; ++i) {
      const mpq_class c = mpq_class(binomial(n, i)) * qpow(br_f, i - 1);
      PadicScalar term = b[static_cast<std::size_t>(i)] * c;
      if (i > 0) term *= qy.pow(i);
      if (n - i > 0) term *= by.pow(n - i);
      s += term;
    }
    total += chi.value(a, work) * s;
  }
  return total;
}

std::pair<PadicScalar, PadicScalar> volkenborn_q_integral(int m, const PadicQ& q, int level, int precision) {
  if (level < 1) throw DomainError("level must be positive");
  const std::int64_t p = q.prime();
  const mpq_class& qr = q.rational();
  const int w = precision + level + 2;
  const PadicScalar qp = PadicScalar::from_rational(p, qr, w);
  const long count = prime_power(p, level).get_si();
  PadicScalar qa = PadicScalar::one(p, w);
  PadicScalar br = PadicScalar::zero(p);
  PadicScalar sum = PadicScalar::zero(p);
  for (long a = 0; a < count; ++a) {
    if (m == 0) sum += qa;
    else if (a > 0) sum += br.pow(m) * qa;
    br += qa;
    qa *= qp;
  }
  const PadicScalar riemann = sum / qbracket(qr, count);

  mpq_class closed = 0;
  for (int i = 0; i <= m; ++i) {
    mpq_class t = mpq_class(binomial(m, i) * (i + 1)) / qbracket(qr, i + 1);
    closed += (i % 2 == 0) ? t : mpq_class(-t);
  }
  closed /= qpow(1 - qr, m);
  closed.canonicalize();
  return {riemann, PadicScalar::from_rational(p, closed, precision)};
}

// ---------------------------------------------------------------------------

long double to_long_double(const mpq_class& x) {
  auto conv = [](const mpz_class& z, long& exp) {
    const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    mpz_class t = abs(z);
    exp = 0;
    if (bits > 64) {
      exp = static_cast<long>(bits - 64);
      t >>= static_cast<mp_bitcnt_t>(exp);
    }
    // t < 2^64: split into two 32-bit halves
    const unsigned long lo = mpz_class(t & 0xffffffffUL).get_ui();
    const unsigned long hi = mpz_class(t >> 32).get_ui();
    long double r = static_cast<long double>(hi) * 4294967296.0L + static_cast<long double>(lo);
    return z < 0 ? -r : r;
  };
  long en = 0, ed = 0;
  const long double n = conv(x.get_num(), en);
  const long double d = conv(x.get_den(), ed);
  return std::ldexp(n / d, static_cast<int>(en - ed));
}

std::vector<Complex> beta_numbers_complex(Complex q, int n) {
  if (std::abs(q) >= 1) throw DomainError("complex mode needs |q| < 1");
  std::vector<Complex> b;
  b.push_back((q - 1.0L) / std::log(q));
  for (int k = 1; k <= n; ++k) {
    Complex acc = k == 1 ? 1.0L : 0.0L;
    Complex qi = 1;
    for (int i = 0; i < k; ++i) {
      acc -= static_cast<long double>(binomial(k, i).get_d()) * qi * b[static_cast<std::size_t>(i)];
      qi *= q;
    }
    b.push_back(acc / (qi - 1.0L));
  }
  return b;
}

std::vector<Complex> beta_numbers_from_exact(const mpq_class& q, int n, int g) {
  const Complex mu = 1.0L / std::log(Complex(to_long_double(q)));
  std::vector<Complex> out;
  for (int i = 0; i <= n; ++i) {
    auto [a, b] = beta_number_exact(i, g).evaluate_parts(q);
    out.push_back(Complex(to_long_double(a)) + Complex(to_long_double(b)) * mu);
  }
  return out;
}

Complex cpow(Complex q, long double x) {
  if (q.imag() == 0 && q.real() > 0) return std::pow(q.real(), x);
  if (x == std::floor(x) && std::fabs(x) < 1e6L) {
    Complex r = 1;
    Complex b = x < 0 ? 1.0L / q : q;
    for (long k = static_cast<long>(std::fabs(x)); k > 0; k >>= 1) {
      if (k & 1) r *= b;
      b *= b;
    }
    return r;
  }
  return std::exp(x * std::log(q));
}

Complex cbracket(Complex q, long double x) { return (1.0L - cpow(q, x)) / (1.0L - q); }

Complex beta_poly_complex(const std::vector<Complex>& beta_qg, int n, Complex q, long double e, int g) {
  const Complex ratio = cbracket(q, e) / cbracket(q, g);
  const Complex qe = cpow(q, e);
  Complex sum = 0;
  for (int i = 0; i <= n; ++i) {
    sum += static_cast<long double>(binomial(n, i).get_d()) * std::pow(qe, i) * beta_qg[static_cast<std::size_t>(i)] *
           std::pow(ratio, n - i);
  }
  return sum;
}

Complex character_value_complex(const CharValue& v) {
  if (v.zero) return 0;
  const long o = v.exact_order();
  if (o == 1) return 1;
  if (o == 2) return -1;
  const long double angle = 2.0L * 3.14159265358979323846264338327950288L * v.k / v.m;
  return {std::cos(angle), std::sin(angle)};
}

Complex gen_beta_poly_complex(int n, const DirichletCharacter& chi, const mpq_class& q, long double x) {
  const DirichletCharacter prim = chi.primitive();
  const int f = static_cast<int>(prim.conductor());
  const auto b = beta_numbers_from_exact(q, n, f);
  const Complex qc = to_long_double(q);
  Complex sum = 0;
  for (int a = 0; a < f; ++a) {
    const Complex c = character_value_complex(prim(a));
    if (c == 0.0L) continue;
    sum += c * beta_poly_complex(b, n, qc, a + x, f);
  }
  return sum * std::pow(cbracket(qc, f), n - 1);
}

Complex gf_oracle_beta(int n, Complex q, int trunc) {
  return gen_gf_oracle(n, DirichletCharacter(), q, trunc);
}

Complex gen_gf_oracle(int n, const DirichletCharacter& chi, Complex q, int trunc) {
  if (std::abs(q) >= 1) throw DomainError("generating-function oracle needs |q| < 1");
  const DirichletCharacter prim = chi.primitive();
  Complex sum = 0;
  if (prim.modulus() == 1) sum = (q - 1.0L) / std::log(q) / std::pow(1.0L - q, n);
  if (n == 0) return sum;
  Complex qk = 1;
  Complex br = 0;
  Complex tail = 0;
  for (int k = 0; k < trunc; ++k) {
    const Complex c = character_value_complex(prim(k));
    if (c != 0.0L) tail += c * qk * (n == 1 ? Complex(1) : std::pow(br, n - 1));
    br += qk;
    qk *= q;
  }
  return sum - static_cast<long double>(n) * tail;
}

mpf_class log_real(const mpq_class& x, unsigned bits) {
  if (x <= 0) throw DomainError("log_real needs a positive argument");
  // log x = 2 atanh((x-1)/(x+1)), after pulling out powers of 2 so the
  // argument is in [1/2, 2).
  mpq_class y = x;
  long k = 0;
  while (y >= 2) {
    y /= 2;
    ++k;
  }
  while (y < mpq_class(1, 2)) {
    y *= 2;
    --k;
  }
  auto atanh_series = [&](const mpq_class& z) {
    mpf_class zf(z, bits);
    mpf_class z2 = zf * zf;
    mpf_class term(zf, bits);
    mpf_class sum(zf, bits);
    mpf_class eps(1, bits);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits + 8);
    for (unsigned long j = 3;; j += 2) {
      term *= z2;
      mpf_class t = term / static_cast<double>(j);
      sum += t;
      if (abs(t) < eps) break;
    }
    return sum;
  };
  mpf_class r = 2 * atanh_series(mpq_class((y - 1) / (y + 1)));
  if (k != 0) {
    mpf_class ln2 = 2 * atanh_series(mpq_class(1, 3));
    r += ln2 * static_cast<double>(k);
  }
  return r;
}

mpf_class beta_number_real(int n, const mpq_class& q, unsigned bits) {
  auto [a, b] = beta_number_exact(n, 1).evaluate_parts(q);
  mpf_class r(a, bits);
  if (b != 0) r += mpf_class(b, bits) / log_real(q, bits);
  return r;
}

}  // namespace qpadic
