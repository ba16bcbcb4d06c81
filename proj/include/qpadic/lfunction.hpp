#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qpadic/characters.hpp"
#include "qpadic/cyclo.hpp"
#include "qpadic/qbernoulli.hpp"
#include "qpadic/qparam.hpp"

namespace qpadic {

// Two-variable p-adic q-L-function
//
//   L_{p,q}(s,t|chi) = 1/((s-1)[F]) sum_{0<a<=F, p!a} chi(a) <a+p*t>^{1-s}
//                        sum_m C(1-s,m) beta_{m,q^F} z_a^m,   z_a = q^{a+p*t} [F] / [a+p*t],
//
// with s and t p-integral rationals. The weights may be twisted by a power
// of the Teichmueller character: twist j uses chi(a) w(a)^{-j}.

struct LpqRequest {
  std::int64_t p = 5;
  mpq_class q = 6;
  DirichletCharacter chi;
  std::int64_t F = 0;  // 0: choose_F
  mpq_class s = 0;
  mpq_class t = 0;
  int target_precision = 10;
  int extra_terms = 0;  // added to the certified truncation order
};

struct LpqResult {
  CycloScalar value;
  int achieved_precision = 0;
  int truncation_order = 0;
  int working_precision = 0;
  bool shortfall = false;
};

/// lcm(p*, modulus of chi).
std::int64_t choose_F(const DirichletCharacter& chi, std::int64_t p);
/// Checks the request and returns the F in use.
std::int64_t resolve_F(const LpqRequest& req);

/// Paper expansion: <a+p*t>^{1-s} = <a>^{1-s} sum_k C(1-s,k) u^k with u = q^a [p*t] / [a].
/// At s = 1 a non-principal character is sent to Lpq_at_one.
LpqResult Lpq(const LpqRequest& req, long twist = 0);
/// Sum of H_{p,q}(s, a+p*t, F) with <a+p*t>^{1-s} taken through exp and log directly.
LpqResult Lpq_via_H(const LpqRequest& req, long twist = 0);

/// H_{p,q}(s, y, F) for a p-adic unit y (y = a + p* t).
PadicScalar Hpq(const mpq_class& s, const mpq_class& y, std::int64_t F, const mpq_class& q, std::int64_t p,
                int precision);

/// -(1/n)(beta_{n,chi_n,q}(p*t) - chi_n(p) [p]^{n-1} beta_{n,chi_n,q^p}(p^{-1} p* t)).
CycloScalar interpolation_rhs(int n, const mpq_class& t, const DirichletCharacter& chi, std::int64_t p,
                              const mpq_class& q, int precision);

/// [F]^{-1} (q^F - 1)/log q (1 - 1/p): the residue at s = 1 when chi w^{-twist} is principal.
PadicScalar residue_at_one(const LpqRequest& req, long twist = 0);

enum class AtOneVariantP {
  kCorrected,     // -beta_{0,q^F} log<y> + sum (-1)^m/m ...
  kTheorem,       // -log<y> + sum (-1)^{m-1}/m ...
  kTheoremStray,  // as kTheorem with [f] in place of [F]
  kRemark         // -log<y> + sum (-1)^m/m ...
};
/// L_{p,q}(1, t | chi) for chi non-principal.
LpqResult Lpq_at_one(const LpqRequest& req, AtOneVariantP variant = AtOneVariantP::kCorrected, long twist = 0);

struct TPartial {
  CycloScalar corrected;  // p* log q [(1-s) L(s,t|chi) - s/(q-1) L(s+1,t|chi_1)] iterated
  CycloScalar literal;    // C(-s,n) n! (p* log q/(q-1))^n L(s+n,t|chi_n)
  int achieved_precision = 0;
};
/// n-th t-derivative. The literal form replaces s L(s+n) by the residue when
/// s + n = 1 and chi_n is principal.
TPartial t_partial(int n, const LpqRequest& req);
/// The closed values at s = 1-n as printed for chi trivial / non-trivial.
PadicScalar t_partial_printed_value(int n, const LpqRequest& req);

/// G_{p,Q}(x) = (x b_0 + b_1) log x - x b_0 + sum_{n>=1} (-1)^{n+1}/(n(n+1)) b_{n+1} x^{-n},
/// Q = q^g, b_m = beta_{m,Q}, |x|_p > 1.
PadicScalar diamond_q_gamma(const PadicScalar& x, const PadicQ& q, int g, int precision);
/// (x - 1/2) log x - x + sum_{j>=2} B_j/(j(j-1)) x^{1-j}.
PadicScalar diamond_gamma(const PadicScalar& x, int precision);

enum class DaeheeVariant {
  kCorrected,  // x b_1 log(x/[F]) + sum_{m>=2} (-1)^m/(m(m-1)) sum_l ...
  kEq26,       // x b_1 (log x - 1) + sum_{m>=2} sum_l C(m,l)(q-1)^{l-1}[F]^{m-1} x^{l-m+1} b_m
  kEq27        // (log x - 1) x b_1 + sum_{m>=1} sum_l C(m,l)(y-1)^{l-m}(y^F-1)^{m-1} x^{l-m+1} b_m
};
/// D(x) with y = q and b_m = beta_{m,q^F}; x = [a+p*t]_q is a unit.
PadicScalar daehee_operator(const PadicScalar& x, const PadicQ& q, std::int64_t F, int precision,
                            DaeheeVariant variant = DaeheeVariant::kCorrected);

struct DerivativeAtZero {
  CycloScalar value;        // gamma_sum - L(0,t) log[F] + (q-1) daehee_sum (corrected)
  CycloScalar gamma_sum;    // sum chi_1(a) G_{p,q^F}([a+p*t]/[F])
  CycloScalar daehee_sum[3];  // indexed by DaeheeVariant
  CycloScalar middle[3];      // L(0,t), q^{p*t} L(0,0), q^{p*t} L(0,t), each times log[F]
  int achieved_precision = 0;

  /// gamma_sum - middle[m] + (q-1) daehee_sum[d]
  CycloScalar assemble(DaeheeVariant d, int middle_reading, const mpq_class& q) const;
};
/// Derivative in s at s = 0; chi must be primitive.
DerivativeAtZero derivative_s_at_zero(const LpqRequest& req);

/// q = 1 path: [x] = x, beta_m = B_m, <y> = y / w(a).
LpqResult classical_limit_Lp(const LpqRequest& req, long twist = 0);
/// -(1/n)(B_{n,chi_n}(p*t) - chi_n(p) p^{n-1} B_{n,chi_n}(p^{-1} p* t)) from classical
/// Bernoulli polynomials in exact arithmetic; t must be rational.
CycloScalar classical_interpolation_rhs(int n, const mpq_class& t, const DirichletCharacter& chi, std::int64_t p,
                                        int precision);
/// B_n(x) exactly.
mpq_class bernoulli_polynomial(int n, const mpq_class& x);

}  // namespace qpadic
