#include "qpadic/lfunction.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/padic_functions.hpp"

namespace qpadic {
namespace {

constexpr int kAttempts = 5;

int floor_log(std::int64_t n, std::int64_t p) {
  int k = 0;
  for (std::int64_t x = p; x <= n; x *= p) ++k;
  return k;
}

mpq_class binom_rational(const mpq_class& x, int m) {
  mpq_class r = 1;
  for (int i = 0; i < m; ++i) r *= (x - i);
  r /= mpq_class(factorial(m));
  r.canonicalize();
  return r;
}

bool is_integer(const mpq_class& r) { return r.get_den() == 1; }

void check_p_integral(const mpq_class& r, std::int64_t p, const char* name) {
  if (r != 0 && valuation(r, p) < 0) throw DomainError(std::string(name) + " must be a p-adic integer");
}

bool twisted_principal(const DirichletCharacter& chi, long twist, std::int64_t p) {
  return twist == 0 ? chi.is_principal() : twist_teichmuller(chi, twist, p).is_principal();
}

// the q-Bernoulli side is built from the primitive character, so the
// modulus may only add the prime p
void check_primitive_away_from(const DirichletCharacter& chi, std::int64_t p) {
  std::int64_t m = chi.modulus();
  for (std::int64_t g = std::gcd(m, chi.conductor() * p); g > 1; g = std::gcd(m, g)) m /= g;
  if (m != 1) throw DomainError("chi must be primitive away from p");
}

struct Residue {
  std::int64_t a = 0;
  mpq_class y;
  CycloScalar weight;
  PadicScalar qy, by;  // q^y, [y]_q
  PadicScalar teich;
};

struct Setup {
  std::int64_t p = 0, ps = 0, F = 0;
  int vF = 0, W = 0;
  std::int64_t ring = 1;
  mpq_class bracket_F;
  std::vector<Residue> res;
};

Setup make_setup(const LpqRequest& req, std::int64_t F, long twist, int W, bool classical) {
  Setup st;
  st.p = req.p;
  st.ps = p_star(req.p);
  st.F = F;
  st.vF = valuation(F, req.p);
  st.W = W;
  st.ring = value_ring_order(req.chi, req.p);
  st.bracket_F = classical ? mpq_class(F) : qbracket(req.q, static_cast<long>(F));
  std::optional<PadicQ> q;
  if (!classical) q.emplace(req.p, req.q, W);
  for (std::int64_t a = 1; a <= F; ++a) {
    if (a % st.p == 0) continue;
    const CharValue v = req.chi(a);
    if (v.zero) continue;
    Residue r;
    r.a = a;
    r.y = mpq_class(a) + mpq_class(st.ps) * req.t;
    r.y.canonicalize();
    r.teich = teichmuller(a, st.p, W);
    r.weight = embed_padic(v, st.ring, st.p, W);
    if (twist != 0) r.weight *= r.teich.pow(-twist);
    if (classical) {
      r.qy = PadicScalar::one(st.p, W);
      r.by = PadicScalar::from_rational(st.p, r.y, W);
    } else if (is_integer(r.y) && r.y.get_num().fits_slong_p()) {
      const long y = r.y.get_num().get_si();
      r.qy = q->pow(y);
      r.by = q->bracket(y);
    } else {
      const PadicScalar ys = PadicScalar::from_rational(st.p, r.y, W);
      r.qy = q->pow(ys);
      r.by = q->bracket(ys);
    }
    st.res.push_back(std::move(r));
  }
  return st;
}

// <y>^{1-s} by exp((1-s) log <y>)
PadicScalar angle_power_direct(const Residue& r, const mpq_class& one_minus_s) {
  const PadicScalar angle = r.by / r.teich;
  return pexp(plog(angle) * one_minus_s);
}

// <a>^{1-s} sum_k C(1-s,k) (q^a [p* t] / [a])^k
PadicScalar angle_power_binomial(const Residue& r, const Setup& st, const LpqRequest& req, const mpq_class& one_minus_s) {
  const PadicQ q(st.p, req.q, st.W);
  const PadicScalar base = q.bracket(static_cast<long>(r.a)) / r.teich;
  PadicScalar out = pexp(plog(base) * one_minus_s);
  if (req.t == 0) return out;
  const mpq_class pt = mpq_class(st.ps) * req.t;
  PadicScalar br_pt;
  if (is_integer(pt) && pt.get_num().fits_slong_p()) {
    br_pt = q.bracket(pt.get_num().get_si());
  } else {
    br_pt = q.bracket(PadicScalar::from_rational(st.p, pt, st.W));
  }
  const PadicScalar u = q.pow(static_cast<long>(r.a)) * br_pt / q.bracket(static_cast<long>(r.a));
  const int vu = u.is_zero() ? st.W : u.valuation();
  const int K = st.W / std::max(1, vu) + 2;
  PadicScalar sum = PadicScalar::one(st.p, st.W);
  PadicScalar uk = PadicScalar::one(st.p, st.W);
  for (int k = 1; k <= K; ++k) {
    uk *= u;
    const mpq_class c = binom_rational(one_minus_s, k);
    if (c == 0) break;
    sum += uk * c;
  }
  return out * sum;
}

PadicScalar inner_series(const Residue& r, const Setup& st, const std::vector<PadicScalar>& beta,
                         const std::vector<mpq_class>& binoms) {
  const PadicScalar z = r.qy * st.bracket_F / r.by;
  PadicScalar sum = beta[0] * binoms[0];
  PadicScalar zm = PadicScalar::one(st.p, st.W + 8);
  for (std::size_t m = 1; m < binoms.size(); ++m) {
    zm *= z;
    if (binoms[m] == 0) continue;
    sum += beta[m] * zm * binoms[m];
  }
  return sum;
}

int initial_precision(const LpqRequest& req, int vF, int extra) {
  const int vq = req.q == 1 ? 0 : valuation(mpq_class(req.q - 1), req.p);
  return req.target_precision + vF + vq + extra + 8;
}

enum class Route { kBinomial, kDirect, kClassical };

LpqResult evaluate(const LpqRequest& req, long twist, Route route) {
  const std::int64_t F = resolve_F(req);
  const std::int64_t p = req.p;
  check_p_integral(req.s, p, "s");
  check_p_integral(req.t, p, "t");
  const bool principal = twisted_principal(req.chi, twist, p);
  if (req.s == 1) {
    if (principal) throw DomainError("L_{p,q}(s,t|chi) has a pole at s = 1 for a principal character");
    if (route == Route::kClassical) throw DomainError("the classical path is not evaluated at s = 1");
    return Lpq_at_one(req, AtOneVariantP::kCorrected, twist);
  }
  const int vF = valuation(F, p);
  const int delta = p == 2 ? 1 : 0;
  const mpq_class one_minus_s = 1 - req.s;
  const int vs1 = valuation(one_minus_s, p);
  const bool finite = is_integer(one_minus_s) && one_minus_s > 0;

  int M;
  int cert;
  if (finite) {
    M = static_cast<int>(one_minus_s.get_num().get_si());
    cert = INT_MAX;
  } else {
    // terms with m > M have valuation >= m vF - 1 - delta before the division by (s-1)[F]
    M = 1;
    while (M * vF - 1 - delta - vs1 < req.target_precision) ++M;
    M += req.extra_terms;
    cert = M * vF - 1 - delta - vs1;
  }
  std::vector<mpq_class> binoms;
  for (int m = 0; m <= M; ++m) binoms.push_back(binom_rational(one_minus_s, m));

  int W = initial_precision(req, vF, vs1);
  LpqResult out;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const bool classical = route == Route::kClassical;
    const Setup st = make_setup(req, F, twist, W, classical);
    std::vector<PadicScalar> beta;
    if (classical) {
      for (const auto& b : bernoulli_numbers(M)) beta.push_back(PadicScalar::from_rational(p, b, W + 2));
    } else {
      beta = beta_numbers_padic(PadicQ(p, req.q, W), static_cast<int>(F), M, W);
    }
    CycloScalar total = CycloScalar::zero(st.ring, p);
    for (const auto& r : st.res) {
      const PadicScalar power =
          route == Route::kBinomial ? angle_power_binomial(r, st, req, one_minus_s) : angle_power_direct(r, one_minus_s);
      total += r.weight * (power * inner_series(r, st, beta, binoms));
    }
    const mpq_class scale = 1 / (mpq_class(req.s - 1) * st.bracket_F);
    total *= PadicScalar::from_rational(p, scale, W + 16);
    out.achieved_precision = std::min(total.abs_precision(), cert);
    out.value = total.with_abs_precision(out.achieved_precision);
    out.truncation_order = M;
    out.working_precision = W;
    out.shortfall = out.achieved_precision < req.target_precision;
    if (!out.shortfall) break;
    W += req.target_precision / 2 + 6;
  }
  return out;
}

PadicScalar residue_closed_form(const LpqRequest& req, std::int64_t F, long twist, int precision) {
  const std::int64_t p = req.p;
  // number of residues a <= F prime to p on which the twisted character is 1
  long count = 0;
  for (std::int64_t a = 1; a <= F; ++a) {
    if (a % p != 0 && !req.chi(a).zero) ++count;
  }
  (void)twist;
  const PadicQ q(p, req.q, precision + valuation(mpq_class(req.q - 1), p) + 4);
  const mpq_class br = qbracket(req.q, static_cast<long>(F));
  // count/F (q^F - 1)/(F log q) / [F] ... with beta_{0,q^F} = (q^F - 1)/(F log q)
  mpq_class c = mpq_class(count) * (qpow(req.q, static_cast<long>(F)) - 1) / (mpq_class(F) * br);
  c.canonicalize();
  return PadicScalar::from_rational(p, c, precision + 8) / q.log_q();
}

}  // namespace

std::int64_t choose_F(const DirichletCharacter& chi, std::int64_t p) { return lcm(p_star(p), chi.modulus()); }

std::int64_t resolve_F(const LpqRequest& req) {
  if (!is_prime(req.p)) throw DomainError("not a prime: " + std::to_string(req.p));
  if (req.target_precision < 1) throw DomainError("target precision must be positive");
  const std::int64_t F = req.F == 0 ? choose_F(req.chi, req.p) : req.F;
  if (F < 1 || F % p_star(req.p) != 0 || F % req.chi.modulus() != 0) {
    throw DomainError("F = " + std::to_string(F) + " must be a multiple of p* and of the modulus of chi");
  }
  if (req.q != 1) QParameter{req.q, req.p}.validate_padic(false);
  return F;
}

LpqResult Lpq(const LpqRequest& req, long twist) { return evaluate(req, twist, Route::kBinomial); }

LpqResult Lpq_via_H(const LpqRequest& req, long twist) { return evaluate(req, twist, Route::kDirect); }

PadicScalar Hpq(const mpq_class& s, const mpq_class& y, std::int64_t F, const mpq_class& q, std::int64_t p,
                int precision) {
  if (s == 1) throw DomainError("H_{p,q} has a pole at s = 1");
  if (y == 0 || valuation(y, p) != 0) throw DomainError("H_{p,q} needs a p-adic unit argument");
  if (F % p_star(p) != 0) throw DomainError("F must be a multiple of p*");
  check_p_integral(s, p, "s");
  // y = a + p* t with a the least positive residue of y mod p*
  const std::int64_t ps = p_star(p);
  const mpz_class yr = mod(mpz_class(y.get_num() * inverse_mod(y.get_den(), mpz_class(ps))), mpz_class(ps));
  const std::int64_t a = yr.get_si();
  LpqRequest req;
  req.p = p;
  req.q = q;
  req.chi = DirichletCharacter();
  req.F = F;
  req.s = s;
  req.t = (y - a) / ps;
  req.t.canonicalize();
  req.target_precision = precision;

  const mpq_class one_minus_s = 1 - s;
  const int vF = valuation(F, p);
  const int vs1 = valuation(one_minus_s, p);
  const bool finite = is_integer(one_minus_s) && one_minus_s > 0;
  int M = finite ? static_cast<int>(one_minus_s.get_num().get_si()) : 1;
  if (!finite) {
    while (M * vF - 1 - (p == 2) - vs1 < precision) ++M;
  }
  std::vector<mpq_class> binoms;
  for (int m = 0; m <= M; ++m) binoms.push_back(binom_rational(one_minus_s, m));
  const int W = initial_precision(req, vF, vs1);

  Setup st;
  st.p = p;
  st.ps = ps;
  st.F = F;
  st.vF = vF;
  st.W = W;
  st.bracket_F = qbracket(q, static_cast<long>(F));
  const PadicQ qw(p, q, W);
  Residue r;
  r.a = a;
  r.y = y;
  r.teich = teichmuller(a, p, W);
  if (is_integer(y) && y.get_num().fits_slong_p()) {
    r.qy = qw.pow(y.get_num().get_si());
    r.by = qw.bracket(y.get_num().get_si());
  } else {
    const PadicScalar ys = PadicScalar::from_rational(p, y, W);
    r.qy = qw.pow(ys);
    r.by = qw.bracket(ys);
  }
  const auto& beta = beta_numbers_padic(qw, static_cast<int>(F), M, W);
  PadicScalar v = angle_power_direct(r, one_minus_s) * inner_series(r, st, beta, binoms);
  v = v / (mpq_class(s - 1) * st.bracket_F);
  if (!finite) v = v.with_abs_precision(M * vF - 1 - (p == 2) - vs1);
  return v;
}

CycloScalar interpolation_rhs(int n, const mpq_class& t, const DirichletCharacter& chi, std::int64_t p,
                              const mpq_class& q, int precision) {
  if (n < 1) throw DomainError("interpolation needs n >= 1");
  check_p_integral(t, p, "t");
  check_primitive_away_from(chi, p);
  const std::int64_t ps = p_star(p);
  const TwistedCharacter tw(chi, n, p);
  const int W = precision + 6;
  const PadicQ qq(p, q, W);
  auto arg = [&](const mpq_class& y) {
    return y == 0 ? PadicScalar::zero(p) : PadicScalar::from_rational(p, y, W);
  };
  CycloScalar first = gen_beta_poly_padic(qq, n, tw, arg(mpq_class(ps) * t), W);
  if (!tw.is_zero_at(p)) {
    const mpq_class y2 = mpq_class(ps, p) * t;
    CycloScalar second = gen_beta_poly_padic(qq.power_base(p), n, tw, arg(y2), W);
    second = second * tw.value(p, W);
    second *= PadicScalar::from_rational(p, qpow(qbracket(q, p), n - 1), W + 4);
    first -= second;
  }
  first *= PadicScalar::from_rational(p, mpq_class(-1, n), W + 4);
  return first;
}

PadicScalar residue_at_one(const LpqRequest& req, long twist) {
  const std::int64_t F = resolve_F(req);
  if (!twisted_principal(req.chi, twist, req.p)) throw DomainError("the residue vanishes for a non-principal character");
  return residue_closed_form(req, F, twist, req.target_precision);
}

LpqResult Lpq_at_one(const LpqRequest& req, AtOneVariantP variant, long twist) {
  const std::int64_t F = resolve_F(req);
  const std::int64_t p = req.p;
  check_p_integral(req.t, p, "t");
  if (twisted_principal(req.chi, twist, p)) throw DomainError("L_{p,q}(1,t|chi) needs a non-principal character");
  const int vF = valuation(F, p);
  const int delta = p == 2 ? 1 : 0;
  // z uses [F], or [f] as printed in the theorem
  const std::int64_t scale_index = variant == AtOneVariantP::kTheoremStray ? req.chi.conductor() : F;
  const int vz = valuation(scale_index, p);
  if (vz == 0) throw ConvergenceError("the m-series with [f]_q, p not dividing f, does not converge p-adically");
  auto term_bound = [&](int m) { return m * vz - 1 - delta - floor_log(m, p) - vF; };
  int M = 1;
  auto tail_ok = [&](int from) {
    for (int m = from; m < from + 64; ++m) {
      if (term_bound(m) < req.target_precision) return false;
    }
    return true;
  };
  while (!tail_ok(M + 1)) ++M;
  M += req.extra_terms;
  int cert = INT_MAX;
  for (int m = M + 1; m < M + 64; ++m) cert = std::min(cert, term_bound(m));

  int W = initial_precision(req, vF, 2);
  LpqResult out;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Setup st = make_setup(req, F, twist, W, false);
    st.bracket_F = qbracket(req.q, static_cast<long>(scale_index));
    const auto& beta = beta_numbers_padic(PadicQ(p, req.q, W), static_cast<int>(F), M, W);
    CycloScalar total = CycloScalar::zero(st.ring, p);
    for (const auto& r : st.res) {
      const PadicScalar log_angle = plog(r.by / r.teich);
      PadicScalar inner = variant == AtOneVariantP::kCorrected ? -(beta[0] * log_angle) : -log_angle;
      const PadicScalar z = r.qy * st.bracket_F / r.by;
      PadicScalar zm = PadicScalar::one(p, W + 8);
      for (int m = 1; m <= M; ++m) {
        zm *= z;
        const bool odd_sign = variant == AtOneVariantP::kTheorem || variant == AtOneVariantP::kTheoremStray;
        const bool plus = odd_sign ? (m % 2 == 1) : (m % 2 == 0);
        inner += beta[static_cast<std::size_t>(m)] * zm * mpq_class(plus ? 1 : -1, m);
      }
      total += r.weight * inner;
    }
    total /= PadicScalar::from_rational(p, qbracket(req.q, static_cast<long>(F)), W + 16);
    out.achieved_precision = std::min(total.abs_precision(), cert);
    out.value = total.with_abs_precision(out.achieved_precision);
    out.truncation_order = M;
    out.working_precision = W;
    out.shortfall = out.achieved_precision < req.target_precision;
    if (!out.shortfall) break;
    W += req.target_precision / 2 + 6;
  }
  return out;
}

namespace {

struct DerivContext {
  const LpqRequest& base;
  std::int64_t F;
  PadicScalar c;          // p* log q
  PadicScalar inv_qm1;    // 1/(q-1)
  int achieved = INT_MAX;
};

CycloScalar L_at(DerivContext& ctx, const mpq_class& s, long twist) {
  LpqRequest r = ctx.base;
  r.F = ctx.F;
  r.s = s;
  const LpqResult v = Lpq(r, twist);
  ctx.achieved = std::min(ctx.achieved, v.achieved_precision);
  return v.value;
}

PadicScalar residue_of(DerivContext& ctx, long twist) {
  LpqRequest r = ctx.base;
  r.F = ctx.F;
  return residue_closed_form(r, ctx.F, twist, ctx.base.target_precision + 4);
}

// d^n/dt^n L(s, t | chi_j) by d/dt L(s|chi_j) = c [(1-s) L(s|chi_j) - s/(q-1) L(s+1|chi_{j+1})]
CycloScalar t_derivative(DerivContext& ctx, int n, const mpq_class& s, long j) {
  const std::int64_t p = ctx.base.p;
  if (n == 0) return L_at(ctx, s, j);
  const std::int64_t ring = value_ring_order(ctx.base.chi, p);
  CycloScalar first = CycloScalar::zero(ring, p);
  if (s == 1) {
    // (1-s) L(s) -> -residue; higher t-derivatives are regular at s = 1
    if (n == 1 && twisted_principal(ctx.base.chi, j, p)) first = CycloScalar::constant(ring, -residue_of(ctx, j));
  } else {
    first = t_derivative(ctx, n - 1, s, j) * PadicScalar::from_rational(p, 1 - s, ctx.base.target_precision + 16);
  }
  CycloScalar second = CycloScalar::zero(ring, p);
  if (s == 0) {
    if (n == 1 && twisted_principal(ctx.base.chi, j + 1, p)) second = CycloScalar::constant(ring, residue_of(ctx, j + 1));
  } else {
    second = t_derivative(ctx, n - 1, s + 1, j + 1) * PadicScalar::from_rational(p, s, ctx.base.target_precision + 16);
  }
  return (first - second * ctx.inv_qm1) * ctx.c;
}

}  // namespace

TPartial t_partial(int n, const LpqRequest& req) {
  if (n < 1) throw DomainError("t_partial needs n >= 1");
  const std::int64_t F = resolve_F(req);
  const std::int64_t p = req.p;
  const int W = req.target_precision + valuation(mpq_class(req.q - 1), p) + 8;
  const PadicQ q(p, req.q, W);
  DerivContext ctx{req, F, q.log_q() * mpq_class(p_star(p)), PadicScalar::from_rational(p, 1 / (req.q - 1), W + 16)};
  TPartial out;
  out.corrected = t_derivative(ctx, n, req.s, 0);

  // literal: C(-s,n) n! (p* log q/(q-1))^n L(s+n, t | chi_n)
  const PadicScalar k = (ctx.c * ctx.inv_qm1).pow(n);
  const std::int64_t ring = value_ring_order(req.chi, p);
  const mpq_class sn = req.s + n;
  if (sn == 1) {
    if (twisted_principal(req.chi, n, p)) {
      const PadicScalar res = residue_of(ctx, n);
      out.literal = CycloScalar::constant(ring, k * res * (mpq_class(factorial(n)) / mpq_class(-n)));
    } else {
      out.literal = CycloScalar::zero(ring, p);
    }
  } else {
    const mpq_class b = binom_rational(-req.s, n) * mpq_class(factorial(n));
    out.literal = L_at(ctx, sn, n) * (k * b);
  }
  out.achieved_precision = std::min({ctx.achieved, out.corrected.abs_precision(), out.literal.abs_precision()});
  return out;
}

PadicScalar t_partial_printed_value(int n, const LpqRequest& req) {
  const std::int64_t F = resolve_F(req);
  const std::int64_t p = req.p;
  if (!req.chi.is_principal()) return PadicScalar::zero(p);
  const int W = req.target_precision + valuation(mpq_class(req.q - 1), p) + 8;
  const PadicQ q(p, req.q, W);
  const PadicScalar k = (q.log_q() * mpq_class(p_star(p), 1) / mpq_class(req.q - 1)).pow(n);
  mpq_class c = -mpq_class(factorial(n - 1)) * mpq_class(p - 1, p) * (qpow(req.q, static_cast<long>(F)) - 1) /
                qbracket(req.q, static_cast<long>(F));
  c.canonicalize();
  return k * PadicScalar::from_rational(p, c, W) / q.log_q();
}

PadicScalar diamond_q_gamma(const PadicScalar& x, const PadicQ& q, int g, int precision) {
  const std::int64_t p = q.prime();
  if (x.is_zero() || x.valuation() >= 0) throw DomainError("G_{p,q}(x) needs |x|_p > 1");
  const int vx = -x.valuation();
  const int delta = p == 2 ? 1 : 0;
  auto bound = [&](int n) { return n * vx - 1 - delta - floor_log(static_cast<std::int64_t>(n) * (n + 1), p); };
  int N = 1;
  for (;; ++N) {
    bool ok = true;
    for (int n = N + 1; n < N + 64 && ok; ++n) ok = bound(n) >= precision;
    if (ok) break;
  }
  int cert = INT_MAX;
  for (int n = N + 1; n < N + 64; ++n) cert = std::min(cert, bound(n));
  const int W = precision + 2 * vx + 6;
  const auto& beta = beta_numbers_padic(q.with_precision(W), g, N + 1, W);
  const PadicScalar lx = plog(x);
  PadicScalar out = (x * beta[0] + beta[1]) * lx - x * beta[0];
  const PadicScalar xi = x.inverse();
  PadicScalar xn = PadicScalar::one(p, W + 8);
  for (int n = 1; n <= N; ++n) {
    xn *= xi;
    const mpq_class c(n % 2 == 1 ? 1 : -1, n * (n + 1));
    out += beta[static_cast<std::size_t>(n + 1)] * xn * c;
  }
  return out.with_abs_precision(cert);
}

PadicScalar diamond_gamma(const PadicScalar& x, int precision) {
  const std::int64_t p = x.prime();
  if (x.is_zero() || x.valuation() >= 0) throw DomainError("G_p(x) needs |x|_p > 1");
  const int vx = -x.valuation();
  const int delta = p == 2 ? 1 : 0;
  auto bound = [&](int j) { return (j - 1) * vx - 1 - delta - floor_log(static_cast<std::int64_t>(j) * (j - 1), p); };
  int J = 2;
  for (;; ++J) {
    bool ok = true;
    for (int j = J + 1; j < J + 64 && ok; ++j) ok = bound(j) >= precision;
    if (ok) break;
  }
  int cert = INT_MAX;
  for (int j = J + 1; j < J + 64; ++j) cert = std::min(cert, bound(j));
  const auto B = bernoulli_numbers(J);
  PadicScalar out = (x - mpq_class(1, 2)) * plog(x) - x;
  const PadicScalar xi = x.inverse();
  PadicScalar xp = PadicScalar::one(p, x.rel_precision() + 8);
  for (int j = 2; j <= J; ++j) {
    xp *= xi;
    if (B[static_cast<std::size_t>(j)] == 0) continue;
    out += xp * mpq_class(B[static_cast<std::size_t>(j)] / (j * (j - 1)));
  }
  return out.with_abs_precision(cert);
}

PadicScalar daehee_operator(const PadicScalar& x, const PadicQ& q, std::int64_t F, int precision,
                            DaeheeVariant variant) {
  const std::int64_t p = q.prime();
  if (x.is_zero() || x.valuation() != 0) throw DomainError("the operator is evaluated at p-adic units x = [a+p*t]_q");
  const int vF = valuation(F, p);
  const int delta = p == 2 ? 1 : 0;
  const bool weighted = variant == DaeheeVariant::kCorrected;
  auto bound = [&](int m) {
    return (m - 1) * vF - 1 - delta - (weighted ? floor_log(static_cast<std::int64_t>(m) * (m - 1), p) : 0);
  };
  int M = 2;
  for (;; ++M) {
    bool ok = true;
    for (int m = M + 1; m < M + 64 && ok; ++m) ok = bound(m) >= precision;
    if (ok) break;
  }
  int cert = INT_MAX;
  for (int m = M + 1; m < M + 64; ++m) cert = std::min(cert, bound(m));
  const int W = precision + 6;
  const auto& beta = beta_numbers_padic(q.with_precision(W), static_cast<int>(F), M, W);
  const mpq_class& qr = q.rational();
  const mpq_class qF1 = qpow(qr, static_cast<long>(F)) - 1;
  const PadicScalar lx = plog(x);
  PadicScalar out;
  if (variant == DaeheeVariant::kCorrected) {
    const PadicScalar lu = lx - plog(PadicScalar::from_rational(p, qbracket(qr, static_cast<long>(F)), W + 8));
    out = x * beta[1] * lu;
  } else {
    out = x * beta[1] * (lx - 1);
  }
  const int m0 = variant == DaeheeVariant::kEq27 ? 1 : 2;
  for (int m = m0; m <= M; ++m) {
    PadicScalar s = PadicScalar::zero(p);
    for (int l = 1; l <= m; ++l) {
      mpq_class c = mpq_class(binomial(m, l)) * qpow(qr - 1, l - m) * qpow(qF1, m - 1);
      c.canonicalize();
      const PadicScalar term = x.pow(l - m + 1) * c;
      s = l == 1 ? term : s + term;
    }
    PadicScalar t = s * beta[static_cast<std::size_t>(m)];
    if (weighted) t = t * mpq_class(m % 2 == 0 ? 1 : -1, m * (m - 1));
    out += t;
  }
  return out.with_abs_precision(cert);
}

CycloScalar DerivativeAtZero::assemble(DaeheeVariant d, int middle_reading, const mpq_class& q) const {
  CycloScalar v = gamma_sum - middle[middle_reading];
  CycloScalar e = daehee_sum[static_cast<int>(d)];
  const std::int64_t p = gamma_sum.prime();
  e *= PadicScalar::from_rational(p, q - 1, gamma_sum.abs_precision() + 16);
  return v + e;
}

DerivativeAtZero derivative_s_at_zero(const LpqRequest& req) {
  const std::int64_t F = resolve_F(req);
  const std::int64_t p = req.p;
  if (!req.chi.is_primitive()) throw DomainError("the derivative formula needs a primitive character");
  check_p_integral(req.t, p, "t");
  const int vF = valuation(F, p);
  const int W = req.target_precision + 2 * vF + valuation(mpq_class(req.q - 1), p) + 8;
  const Setup st = make_setup(req, F, 1, W, false);
  const PadicQ q(p, req.q, W);
  const std::int64_t ring = st.ring;
  DerivativeAtZero out;
  out.gamma_sum = CycloScalar::zero(ring, p);
  for (auto& d : out.daehee_sum) d = CycloScalar::zero(ring, p);
  const int prec = req.target_precision + 2;
  for (const auto& r : st.res) {
    const PadicScalar u = r.by / st.bracket_F;
    out.gamma_sum += r.weight * diamond_q_gamma(u, q, static_cast<int>(F), prec + vF);
    for (int d = 0; d < 3; ++d) {
      out.daehee_sum[d] += r.weight * daehee_operator(r.by, q, F, prec, static_cast<DaeheeVariant>(d));
    }
  }
  LpqRequest r0 = req;
  r0.F = F;
  r0.s = 0;
  const CycloScalar L0t = Lpq(r0).value;
  r0.t = 0;
  const CycloScalar L00 = Lpq(r0).value;
  const PadicScalar logF = plog(PadicScalar::from_rational(p, st.bracket_F, W));
  const mpq_class pt = mpq_class(st.ps) * req.t;
  const PadicScalar qpt =
      is_integer(pt) ? q.pow(pt.get_num().get_si()) : q.pow(PadicScalar::from_rational(p, pt, W));
  out.middle[0] = L0t * logF;
  out.middle[1] = L00 * (qpt * logF);
  out.middle[2] = L0t * (qpt * logF);
  out.value = out.assemble(DaeheeVariant::kCorrected, 0, req.q);
  out.achieved_precision = out.value.abs_precision();
  return out;
}

LpqResult classical_limit_Lp(const LpqRequest& req, long twist) {
  LpqRequest r = req;
  r.q = 1;
  return evaluate(r, twist, Route::kClassical);
}

mpq_class bernoulli_polynomial(int n, const mpq_class& x) {
  const auto B = bernoulli_numbers(n);
  mpq_class sum = 0, xp = 1;
  for (int k = n; k >= 0; --k) {
    sum += mpq_class(binomial(n, k)) * B[static_cast<std::size_t>(k)] * xp;
    xp *= x;
  }
  sum.canonicalize();
  return sum;
}

CycloScalar classical_interpolation_rhs(int n, const mpq_class& t, const DirichletCharacter& chi, std::int64_t p,
                                        int precision) {
  if (n < 1) throw DomainError("interpolation needs n >= 1");
  check_primitive_away_from(chi, p);
  const std::int64_t ps = p_star(p);
  const TwistedCharacter tw(chi, n, p);
  const std::int64_t f = tw.conductor();
  const int W = precision + 4;
  auto gen_bernoulli = [&](const mpq_class& X) {
    CycloScalar sum = CycloScalar::zero(tw.ring_order(), p);
    for (std::int64_t a = 0; a < f; ++a) {
      if (tw.is_zero_at(a)) continue;
      mpq_class b = qpow(mpq_class(f), n - 1) * bernoulli_polynomial(n, (a + X) / f);
      b.canonicalize();
      if (b == 0) continue;
      sum += tw.value(a, W) * PadicScalar::from_rational(p, b, W);
    }
    return sum;
  };
  CycloScalar out = gen_bernoulli(mpq_class(ps) * t);
  if (!tw.is_zero_at(p)) {
    mpq_class x2 = mpq_class(ps, p) * t;
    x2.canonicalize();
    CycloScalar second = gen_bernoulli(x2) * tw.value(p, W);
    second *= PadicScalar::from_rational(p, qpow(mpq_class(p), n - 1), W);
    out -= second;
  }
  out *= PadicScalar::from_rational(p, mpq_class(-1, n), W);
  return out;
}

}  // namespace qpadic
