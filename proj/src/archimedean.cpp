#include "qpadic/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"

namespace qpadic {
namespace {

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0 && s.real() <= 0 && std::floor(s.real()) == s.real();
}

// sum_{n>=0} w(n) q^{e+gn} ([e+gn]_q / scale)^{-s}
template <class Weight>
SeriesValue progression_sum(Complex s, long double e, int g, Complex scale, Weight w, const ComplexEvalParams& params) {
  const Complex& q = params.q;
  const Complex qg = cpow(q, g);
  const long double ratio = std::abs(qg);
  Complex cur = cpow(q, e);
  SeriesValue out;
  for (int n = 0; n < params.truncation; ++n, cur *= qg) {
    out.terms = n + 1;
    const Complex wn = w(n);
    const Complex br = (1.0L - cur) / (1.0L - q);
    if (wn == 0.0L) continue;
    if (std::abs(br) == 0) throw DomainError("series term with [0]_q in the denominator");
    const Complex t = wn * cur * std::exp(-s * std::log(br / scale));
    out.value += t;
    // the remaining terms shrink geometrically with ratio |q^g|; the factor 2
    // covers the slow drift of [e+gn]_q towards 1/(1-q)
    out.tail_bound = 2 * std::abs(t) * ratio / (1 - ratio);
    if (n >= 4 && std::abs(cur) < 0.5L && out.tail_bound < params.tolerance * std::max(1.0L, std::abs(out.value))) break;
  }
  return out;
}

std::vector<Complex> char_table(const DirichletCharacter& chi) {
  std::vector<Complex> v(static_cast<std::size_t>(chi.modulus()));
  for (std::int64_t a = 0; a < chi.modulus(); ++a) v[static_cast<std::size_t>(a)] = character_value_complex(chi(a));
  return v;
}

void check_F(const DirichletCharacter& chi, int F) {
  if (F < 1 || F % chi.modulus() != 0) {
    throw DomainError("F = " + std::to_string(F) + " is not a multiple of the modulus " + std::to_string(chi.modulus()));
  }
}

Complex pole_part(Complex s, Complex q) { return std::exp(s * std::log(1.0L - q)) / ((s - 1.0L) * std::log(q)); }

}  // namespace

void ComplexEvalParams::validate() const {
  const long double r = std::abs(q);
  if (!(r < 1) || r == 0) throw DomainError("complex mode needs 0 < |q| < 1");
  if (truncation < 1) throw DomainError("truncation must be positive");
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
}

SeriesValue q_hurwitz_zeta(Complex s, long double e, int g, const ComplexEvalParams& params) {
  params.validate();
  if (s == 1.0L) throw DomainError("q-zeta has a pole at s = 1");
  if (g < 1) throw DomainError("base exponent must be positive");
  const Complex scale = cbracket(params.q, g);
  SeriesValue r = progression_sum(s, e, g, scale, [](int) { return Complex(1); }, params);
  const Complex qg = cpow(params.q, g);
  r.value -= std::exp(s * std::log(1.0L - qg)) / ((s - 1.0L) * static_cast<long double>(g) * std::log(params.q));
  return r;
}

SeriesValue qL_two_variable(Complex s, long double x, const DirichletCharacter& chi, const ComplexEvalParams& params) {
  params.validate();
  const auto values = char_table(chi);
  const std::int64_t f = chi.modulus();
  if (chi.is_principal() && s == 1.0L) throw DomainError("pole at s = 1 for the principal character");
  SeriesValue r = progression_sum(
      s, x, 1, Complex(1), [&](int n) { return values[static_cast<std::size_t>(n % f)]; }, params);
  if (chi.is_principal()) {
    const long double c = static_cast<long double>(euler_phi(f)) / static_cast<long double>(f);
    r.value -= c * pole_part(s, params.q);
  }
  return r;
}

SeriesValue qL_via_zeta(Complex s, long double x, const DirichletCharacter& chi, const ComplexEvalParams& params) {
  params.validate();
  const int f = static_cast<int>(chi.modulus());
  SeriesValue out;
  for (int a = 0; a < f; ++a) {
    const Complex c = character_value_complex(chi(a));
    if (c == 0.0L) continue;
    const SeriesValue z = q_hurwitz_zeta(s, a + x, f, params);
    out.value += c * z.value;
    out.tail_bound += std::abs(c) * z.tail_bound;
    out.terms = std::max(out.terms, z.terms);
  }
  const Complex scale = std::exp(-s * std::log(cbracket(params.q, f)));
  out.value *= scale;
  out.tail_bound *= std::abs(scale);
  return out;
}

SeriesValue partial_q_zeta(Complex s, long double a, int F, const ComplexEvalParams& params) {
  params.validate();
  if (F < 1 || !(a > 0)) throw DomainError("partial q-zeta needs a > 0 and F >= 1");
  if (s == 1.0L) throw DomainError("partial q-zeta has a pole at s = 1");
  SeriesValue r = progression_sum(s, a, F, Complex(1), [](int) { return Complex(1); }, params);
  r.value -= pole_part(s, params.q) / static_cast<long double>(F);
  return r;
}

SeriesValue partial_q_zeta_scaled(Complex s, long double a, int F, const ComplexEvalParams& params) {
  SeriesValue z = q_hurwitz_zeta(s, a, F, params);
  const Complex scale = std::exp(-s * std::log(cbracket(params.q, F)));
  z.value *= scale;
  z.tail_bound *= std::abs(scale);
  return z;
}

Complex partial_q_zeta_residue(int F, Complex q) { return (q - 1.0L) / (static_cast<long double>(F) * std::log(q)); }

SeriesValue qL_via_partial(Complex s, long double x, const DirichletCharacter& chi, int F,
                           const ComplexEvalParams& params) {
  check_F(chi, F);
  SeriesValue out;
  for (int a = 0; a < F; ++a) {
    const Complex c = character_value_complex(chi(a));
    if (c == 0.0L) continue;
    const SeriesValue h = partial_q_zeta(s, a + x, F, params);
    out.value += c * h.value;
    out.tail_bound += std::abs(c) * h.tail_bound;
    out.terms = std::max(out.terms, h.terms);
  }
  return out;
}

std::vector<Complex> beta_numbers_series(Complex Q, int M, long double tolerance) {
  const long double r = std::abs(Q);
  if (!(r < 1) || r == 0) throw DomainError("beta series needs 0 < |Q| < 1");
  std::vector<Complex> sums(static_cast<std::size_t>(M + 1));
  const int K = static_cast<int>(std::ceil(std::log(tolerance) / std::log(r))) + 2;
  Complex qk = 1;
  Complex br = 0;
  for (int k = 0; k <= K; ++k) {
    Complex pw = qk;  // q^k [k]^{m-1}
    for (int m = 1; m <= M; ++m) {
      sums[static_cast<std::size_t>(m)] += pw;
      pw *= br;
    }
    br += qk;
    qk *= Q;
  }
  std::vector<Complex> b(static_cast<std::size_t>(M + 1));
  b[0] = (Q - 1.0L) / std::log(Q);
  Complex inv = 1;
  for (int m = 1; m <= M; ++m) {
    inv /= (1.0L - Q);
    b[static_cast<std::size_t>(m)] = b[0] * inv - static_cast<long double>(m) * sums[static_cast<std::size_t>(m)];
  }
  return b;
}

long double expansion_ratio(long double x, const DirichletCharacter& chi, int F, Complex q) {
  check_F(chi, F);
  const Complex bF = cbracket(q, F);
  const long double damp = std::abs(1.0L - cpow(q, F));
  long double worst = 0;
  for (int a = 0; a < F; ++a) {
    if (chi(a).zero) continue;
    const Complex br = cbracket(q, a + x);
    if (std::abs(br) == 0) return std::numeric_limits<long double>::infinity();
    worst = std::max(worst, std::abs(cpow(q, a + x) * bF / br) / damp);
  }
  return worst;
}

SeriesValue qL_expansion(Complex s, long double x, const DirichletCharacter& chi, int F,
                         const ComplexEvalParams& params) {
  params.validate();
  check_F(chi, F);
  if (s == 1.0L) throw DomainError("the expansion has a removable or simple pole at s = 1; use qL_at_one");
  const Complex& q = params.q;
  const bool finite = is_nonpositive_integer(s);
  int M;
  long double rho = 0;
  if (finite) {
    M = static_cast<int>(1 - s.real());
  } else {
    rho = expansion_ratio(x, chi, F, q);
    if (!(rho < 0.9L)) {
      throw ConvergenceError("expansion ratio " + std::to_string(static_cast<double>(rho)) + " is not below 0.9");
    }
    M = std::min(params.truncation, static_cast<int>(std::ceil(std::log(params.tolerance) / std::log(rho))) + 80);
  }
  const Complex Q = cpow(q, F);
  const auto beta = beta_numbers_series(Q, M);
  const Complex bF = cbracket(q, F);
  SeriesValue out;
  for (int a = 0; a < F; ++a) {
    const Complex c = character_value_complex(chi(a));
    if (c == 0.0L) continue;
    const Complex br = cbracket(q, a + x);
    const Complex z = cpow(q, a + x) * bF / br;
    Complex inner = 0, zm = 1, binom = 1;
    long double last = 0;
    for (int m = 0; m <= M; ++m) {
      if (m > 0) {
        binom *= (1.0L - s - static_cast<long double>(m - 1)) / static_cast<long double>(m);
        zm *= z;
      }
      const Complex t = binom * zm * beta[static_cast<std::size_t>(m)];
      inner += t;
      last = std::abs(t);
      out.terms = std::max(out.terms, m + 1);
    }
    const Complex outer = c * std::exp((1.0L - s) * std::log(br));
    out.value += outer * inner;
    if (!finite) out.tail_bound += std::abs(outer) * 2 * last * rho / (1 - rho);
  }
  const Complex scale = 1.0L / ((s - 1.0L) * bF);
  out.value *= scale;
  out.tail_bound *= std::abs(scale);
  return out;
}

ExactQScalar qL_expansion_exact(int n, const DirichletCharacter& chi, long x, int F) {
  if (n < 1) throw DomainError("s = 1 - n needs n >= 1");
  if (x < 0) throw DomainError("exact expansion needs x >= 0");
  check_F(chi, F);
  ExactQScalar sum;
  for (long a = 0; a < F; ++a) {
    const int w = chi.sign(a);
    if (w == 0) continue;
    const long y = a + x;
    for (int m = 0; m <= n; ++m) {
      RationalFunction coef = RationalFunction::q_power(y * m) * RationalFunction::bracket(F).pow(m);
      if (n - m > 0) coef *= RationalFunction::bracket(y).pow(n - m);
      coef *= mpq_class(binomial(n, m) * w);
      sum += beta_number_exact(m, F) * coef;
    }
  }
  // (s-1)^{-1} [F]^{-1} at s = 1-n
  sum /= RationalFunction::bracket(F);
  sum *= RationalFunction(mpq_class(-1, n));
  return sum;
}

SeriesValue qL_at_one(long double x, const DirichletCharacter& chi, int F, const ComplexEvalParams& params,
                      AtOneVariant variant) {
  params.validate();
  check_F(chi, F);
  if (chi.is_principal()) throw DomainError("L_q(1, x | chi) needs a non-principal character");
  const Complex& q = params.q;
  const long double rho = expansion_ratio(x, chi, F, q);
  if (!(rho < 0.9L)) {
    throw ConvergenceError("expansion ratio " + std::to_string(static_cast<double>(rho)) + " is not below 0.9");
  }
  const int M = std::min(params.truncation, static_cast<int>(std::ceil(std::log(params.tolerance) / std::log(rho))) + 80);
  const Complex Q = cpow(q, F);
  const auto beta = beta_numbers_series(Q, M);
  const Complex bF = cbracket(q, F);
  const Complex log_weight = variant == AtOneVariant::kCorrected ? beta[0] : Complex(1);
  SeriesValue out;
  for (int a = 0; a < F; ++a) {
    const Complex c = character_value_complex(chi(a));
    if (c == 0.0L) continue;
    const Complex br = cbracket(q, a + x);
    const Complex z = cpow(q, a + x) * bF / br;
    Complex inner = -log_weight * std::log(br);
    Complex zm = 1;
    long double last = 0;
    for (int m = 1; m <= M; ++m) {
      zm *= z;
      const Complex t = ((m % 2 == 0) ? 1.0L : -1.0L) / static_cast<long double>(m) * zm * beta[static_cast<std::size_t>(m)];
      inner += t;
      last = std::abs(t);
    }
    out.value += c * inner;
    out.tail_bound += 2 * last * rho / (1 - rho);
    out.terms = M + 1;
  }
  out.value /= bF;
  out.tail_bound /= std::abs(bF);
  return out;
}

}  // namespace qpadic
