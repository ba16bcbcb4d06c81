#pragma once

#include <vector>

#include "qpadic/characters.hpp"
#include "qpadic/qbernoulli.hpp"

namespace qpadic {

// Complex-side q-zeta and q-L-series for |q| < 1.
//
// Sums over residues run over a = 0..F-1; the trivial character mod 1 has
// value 1 at 0, so for it the n = 0 term is part of every series and the
// q-L-series of the trivial character is the q-Hurwitz zeta function.
// Rational arguments x = e/g for base q^g are passed as (e, g) with
// q^{g x} = q^e, [x]_{q^g} = [e]_q/[g]_q and log q^g = g Log q.

struct ComplexEvalParams {
  Complex q;
  int truncation = 1000;
  long double tolerance = 1e-15L;

  void validate() const;
};

struct SeriesValue {
  Complex value;
  long double tail_bound = 0;
  int terms = 0;
};

/// zeta_{q^g}(s, e/g) = sum_n Q^{n+e/g} / [n+e/g]_Q^s - (1-Q)^s / ((s-1) log Q), Q = q^g.
SeriesValue q_hurwitz_zeta(Complex s, long double e, int g, const ComplexEvalParams& params);
inline SeriesValue q_hurwitz_zeta(Complex s, long double x, const ComplexEvalParams& params) {
  return q_hurwitz_zeta(s, x, 1, params);
}

/// sum_{n>=0} chi(n) q^{n+x} / [n+x]_q^s, minus the pole part phi(f)/f (1-q)^s/((s-1) log q)
/// when chi is principal mod f.
SeriesValue qL_two_variable(Complex s, long double x, const DirichletCharacter& chi, const ComplexEvalParams& params);

/// [f]^{-s} sum_{a<f} chi(a) zeta_{q^f}(s, (a+x)/f) with f the modulus of chi.
SeriesValue qL_via_zeta(Complex s, long double x, const DirichletCharacter& chi, const ComplexEvalParams& params);

/// H_q(s, a, F) = sum_{n>=0} q^{a+nF}/[a+nF]^s + (1-q)^s / (F (1-s) log q); a > 0 real.
SeriesValue partial_q_zeta(Complex s, long double a, int F, const ComplexEvalParams& params);
/// [F]^{-s} zeta_{q^F}(s, a/F), the second form of H_q.
SeriesValue partial_q_zeta_scaled(Complex s, long double a, int F, const ComplexEvalParams& params);
/// (q-1) / (F log q).
Complex partial_q_zeta_residue(int F, Complex q);
/// sum_{a<F} chi(a) H_q(s, a+x, F) (F a multiple of the modulus).
SeriesValue qL_via_partial(Complex s, long double x, const DirichletCharacter& chi, int F,
                           const ComplexEvalParams& params);

/// beta_{0..M, Q} from beta_m = beta_0/(1-Q)^m - m sum_k Q^k [k]_Q^{m-1}; stable for
/// large m where the recursion loses everything to cancellation.
std::vector<Complex> beta_numbers_series(Complex Q, int M, long double tolerance = 1e-30L);

/// Largest |q^{a+x} [F]_q / [a+x]_q| / |1 - q^F| over the residues with chi(a) != 0.
long double expansion_ratio(long double x, const DirichletCharacter& chi, int F, Complex q);

/// Binomial expansion around [a+x]_q:
/// (s-1)^{-1} [F]^{-1} sum_a chi(a) [a+x]^{1-s} sum_m C(1-s,m) q^{(a+x)m} beta_{m,q^F} ([F]/[a+x])^m.
/// Throws ConvergenceError unless expansion_ratio < 0.9 (not needed at s = 0, -1, ...).
SeriesValue qL_expansion(Complex s, long double x, const DirichletCharacter& chi, int F,
                         const ComplexEvalParams& params);

/// The expansion at s = 1-n (finite in m) over Q(q) + Q(q) mu, integer x >= 0.
ExactQScalar qL_expansion_exact(int n, const DirichletCharacter& chi, long x, int F);

enum class AtOneVariant {
  kCorrected,  // log term weighted by beta_{0,q^F}
  kLiteral     // log term with coefficient 1
};
/// L_q(1, x | chi) for chi non-principal, from the m-expansion at s = 1.
SeriesValue qL_at_one(long double x, const DirichletCharacter& chi, int F, const ComplexEvalParams& params,
                      AtOneVariant variant = AtOneVariant::kCorrected);

}  // namespace qpadic
