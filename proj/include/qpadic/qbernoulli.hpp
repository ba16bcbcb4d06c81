#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "qpadic/characters.hpp"
#include "qpadic/cyclo.hpp"
#include "qpadic/qparam.hpp"
#include "qpadic/rational_function.hpp"

namespace qpadic {

using Complex = std::complex<long double>;

// ---------------------------------------------------------------------------
// Exact mode: values in Q(q) + Q(q) mu, mu = 1 / log q.
//
// Arguments of polynomials are exponent pairs. beta_{n,q^g}(e/g) means
// q^{g x} := q^e and [x]_{q^g} := [e]_q / [g]_q, so no fractional power of
// q is ever formed.

/// beta_{n,q^g} as a function of q (memoised, thread safe).
const ExactQScalar& beta_number_exact(int n, int g = 1);

enum class ClosedFormVariant {
  kDisplayed,       // sum_i C(n,i) (-1)^(n-i) i/[i]_q
  kPolynomialAtZero // sum_i C(n,i) (-1)^i i/[i]_q, i.e. the polynomial formula at x = 0
};
/// (1-q)^-n sum_i C(n,i) (+-1) i/[i]_q with the i = 0 term read as (q-1) mu.
ExactQScalar beta_closed_form_exact(int n, ClosedFormVariant variant);

/// beta_{n,q^g}(e/g).
ExactQScalar beta_poly_exact(int n, int g, long e);

/// Exact mode supports characters with values +-1. The character is replaced
/// by its primitive character; f is its conductor.
ExactQScalar gen_beta_number_exact(int n, const DirichletCharacter& chi);
/// beta_{n,chi,q}(x) = sum_k C(n,k) q^{kx} beta_{k,chi,q} [x]_q^{n-k}.
ExactQScalar gen_beta_poly_exact(int n, const DirichletCharacter& chi, long x);

/// [g]^{n-1} sum_{a=0}^{g-1} chi(a) beta_{n,q^g}((x+a)/g) for a multiple g of f.
/// With `negated` the summand is chi(-a) beta_{n,q^g}((x-a)/g).
ExactQScalar distribution_sum_exact(int n, const DirichletCharacter& chi, long x, int g, bool negated = false);

/// Both sides of the distribution relation: (gen_beta_poly_exact, distribution_sum_exact).
std::pair<ExactQScalar, ExactQScalar> distribution_lemma(int n, const DirichletCharacter& chi, long x, int g,
                                                         bool negated = false);

/// (sum_{k=0}^{N f - 1} chi(k) q^k [k]^l, (beta_{l+1,chi}(N f) - beta_{l+1,chi}) / (l+1)).
std::pair<ExactQScalar, ExactQScalar> sums_of_powers(const DirichletCharacter& chi, int n_blocks, int l);

// ---------------------------------------------------------------------------
// p-adic mode.

/// beta_{0..n, Q} for Q = q^g by the recursion, at a working precision that
/// absorbs the division losses so every entry keeps at least `target`
/// digits of absolute precision. Memoised per (p, q, g, n, target).
const std::vector<PadicScalar>& beta_numbers_padic(const PadicQ& q, int g, int n, int target);
PadicScalar beta_number_padic(const PadicQ& q, int n, int target);

/// Working precision used by beta_numbers_padic.
int beta_working_precision(const PadicQ& q, int g, int n, int target);

/// beta_{n,q^g}(y/g) from the pair q_y = q^y, bracket_y = [y]_q.
PadicScalar beta_poly_padic(const PadicQ& q, int g, int n, const PadicScalar& q_y, const PadicScalar& bracket_y,
                            int target);

/// p-adic values of the primitive character attached to chi * w^{-n},
/// realised in the value ring of chi (n = 0 keeps chi as given).
class TwistedCharacter {
 public:
  TwistedCharacter(const DirichletCharacter& chi, long n, std::int64_t p);

  const DirichletCharacter& base() const { return chi_; }
  const DirichletCharacter& character() const { return twisted_; }
  std::int64_t conductor() const { return twisted_.conductor(); }
  std::int64_t ring_order() const { return ring_; }
  long twist() const { return n_; }

  bool is_zero_at(std::int64_t a) const;
  CycloScalar value(std::int64_t a, int precision) const;

 private:
  DirichletCharacter chi_;
  DirichletCharacter twisted_;
  long n_;
  std::int64_t p_;
  std::int64_t ring_;
};

/// beta_{n,chi,q}(x) for x = p-adic y with q^y, [y]_q available, base q:
/// [f]^{n-1} sum_{a=0}^{f-1} chi(a) beta_{n,q^f}((a+y)/f).
CycloScalar gen_beta_poly_padic(const PadicQ& q, int n, const TwistedCharacter& chi, const PadicScalar& y, int target);

/// Riemann sum (1/[p^N]) sum_{a<p^N} [a]^m q^a and the closed form
/// (1-q)^-m sum_i C(m,i)(-1)^i (i+1)/[i+1]_q.
std::pair<PadicScalar, PadicScalar> volkenborn_q_integral(int m, const PadicQ& q, int level, int precision);

// ---------------------------------------------------------------------------
// Complex mode (|q| < 1, principal logarithm).

/// beta_{0..n,q} by the recursion in floating point.
std::vector<Complex> beta_numbers_complex(Complex q, int n);
/// beta_{0..n,q} from the exact rational functions at a rational q.
std::vector<Complex> beta_numbers_from_exact(const mpq_class& q, int n, int g = 1);

/// beta_{n,q^g}((e)/g) for real exponent e: q^{g x} = q^e, [x]_{q^g} = [e]_q/[g]_q.
Complex beta_poly_complex(const std::vector<Complex>& beta_qg, int n, Complex q, long double e, int g);

Complex character_value_complex(const CharValue& v);
/// [f]^{n-1} sum_{a<f} chi(a) beta_{n,q^f}((a+x)/f) using the primitive character.
Complex gen_beta_poly_complex(int n, const DirichletCharacter& chi, const mpq_class& q, long double x);

/// n! [t^n] of the truncated right side of the q-difference equation for
/// the generating function.
Complex gf_oracle_beta(int n, Complex q, int trunc);
/// Same for the generating function attached to chi; for the trivial
/// character the (q-1)/log q term is included, matching beta_{n,q}.
Complex gen_gf_oracle(int n, const DirichletCharacter& chi, Complex q, int trunc);

/// Complex powers and brackets for real exponents.
Complex cpow(Complex q, long double x);
Complex cbracket(Complex q, long double x);

/// beta_{n,q} at a real rational q with `bits` of working precision (used for
/// the q -> 1 limit, where the two parts cancel heavily).
mpf_class beta_number_real(int n, const mpq_class& q, unsigned bits);
/// Natural logarithm of a positive rational to `bits` bits.
mpf_class log_real(const mpq_class& x, unsigned bits);
/// Long double value of a rational without the double-precision detour.
long double to_long_double(const mpq_class& x);

}  // namespace qpadic
