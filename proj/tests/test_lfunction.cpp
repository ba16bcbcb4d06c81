#include "doctest.h"
#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/lfunction.hpp"
#include "qpadic/padic_functions.hpp"

using namespace qpadic;

namespace {

mpq_class ppow(long p, int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return mpq_class(r);
}

LpqRequest request(long p, const mpq_class& q, const DirichletCharacter& chi, const mpq_class& s, const mpq_class& t,
                   int target) {
  LpqRequest r;
  r.p = p;
  r.q = q;
  r.chi = chi;
  r.s = s;
  r.t = t;
  r.target_precision = target;
  return r;
}

CycloScalar as_cyclo(const CycloScalar& like, const PadicScalar& c) { return CycloScalar::constant(like.order(), c); }

// (L(s, t + h) - L(s, t)) / h
CycloScalar t_difference(const LpqRequest& r, const mpq_class& h) {
  LpqRequest r2 = r;
  r2.t += h;
  return (Lpq(r2).value - Lpq(r).value) / PadicScalar::from_rational(r.p, h, 60);
}

const DirichletCharacter kOne;

}  // namespace

TEST_CASE("beta_{m,q^F} has valuation at least -1") {
  struct Case {
    long p, q;
    int F;
  };
  for (const Case c : {Case{5, 6, 5}, Case{5, 6, 15}, Case{3, 4, 3}, Case{3, 10, 6}, Case{2, 5, 4}, Case{2, 9, 4},
                       Case{7, 8, 7}}) {
    const auto& b = beta_numbers_padic(PadicQ(c.p, c.q, 40), c.F, 40, 20);
    for (const auto& x : b) {
      if (!x.is_zero()) CHECK(x.valuation() >= -1);
    }
  }
}

TEST_CASE("values at s = 1 - n match the generalized q-Bernoulli side") {
  const auto chi3 = character_by_index(3, 1);
  const auto chi4 = character_by_index(4, 1);
  for (const auto& chi : {kOne, chi3, chi4, DirichletCharacter::trivial(5), chi3.induce(15)}) {
    for (const mpq_class& t : {mpq_class(0), mpq_class(1), mpq_class(1, 2), mpq_class(-2, 7)}) {
      for (int n = 1; n <= 5; ++n) {
        auto r = request(5, 6, chi, 1 - n, t, 10);
        const auto L = Lpq(r);
        CHECK(!L.shortfall);
        CHECK(L.achieved_precision >= 10);
        const auto rhs = interpolation_rhs(n, t, chi, 5, 6, 12);
        CHECK(L.value.difference_valuation(rhs) >= 10);
        r.F = 2 * choose_F(chi, 5);
        CHECK(Lpq(r).value.difference_valuation(L.value) >= 10);
      }
    }
  }
  CHECK_THROWS_AS(interpolation_rhs(1, 0, DirichletCharacter::trivial(3), 5, 6, 10), DomainError);
  // p = 3 with a non-unit q - 1 valuation
  for (int n = 1; n <= 4; ++n) {
    const auto r = request(3, 10, character_by_index(4, 1), 1 - n, mpq_class(1, 5), 10);
    CHECK(Lpq(r).value.difference_valuation(interpolation_rhs(n, r.t, r.chi, 3, 10, 12)) >= 10);
  }
}

TEST_CASE("longer truncation leaves certified digits alone") {
  for (const mpq_class& s : {mpq_class(1, 2), mpq_class(-7, 3)}) {
    auto r = request(5, 6, character_by_index(3, 1), s, mpq_class(1, 3), 10);
    const auto a = Lpq(r);
    r.extra_terms = 5;
    const auto b = Lpq(r);
    CHECK(b.truncation_order == a.truncation_order + 5);
    CHECK(a.value.difference_valuation(b.value) >= a.achieved_precision);
  }
}

TEST_CASE("H at s = 1 - n") {
  // H(1-n, a, F) = -[F]^{n-1}/n w(a)^{-n} beta_{n,q^F}(a/F)
  const PadicQ q(5, 6, 30);
  for (int n = 1; n <= 4; ++n) {
    for (long a : {1L, 2L, 7L}) {
      const auto& b = beta_numbers_padic(q, 5, n, 20);
      // beta_{n,Q}(a/F) = sum_k C(n,k) Q^{(a/F)k} [a/F]_Q^{n-k} beta_{k,Q}, Q^{a/F} = q^a, [a/F]_Q = [a]/[F]
      PadicScalar sum = PadicScalar::zero(5);
      const PadicScalar qa = q.pow(a), x = q.bracket(a) / q.bracket(5);
      for (int k = 0; k <= n; ++k) sum += qa.pow(k) * x.pow(n - k) * b[static_cast<std::size_t>(k)] * mpq_class(binomial(n, k));
      const PadicScalar rhs = -(sum * teichmuller(a, 5, 30).pow(-n) * q.bracket(5).pow(n - 1)) / n;
      CHECK(Hpq(1 - n, a, 5, 6, 5, 12).difference_valuation(rhs) >= 12);
    }
  }
}

TEST_CASE("binomial and direct power routes agree") {
  const auto chi3 = character_by_index(3, 1);
  for (const mpq_class& s : {mpq_class(1, 2), mpq_class(3), mpq_class(-7, 3), mpq_class(25, 2)}) {
    for (const mpq_class& t : {mpq_class(0), mpq_class(2, 3)}) {
      const auto r = request(5, 6, chi3, s, t, 10);
      const auto a = Lpq(r);
      const auto b = Lpq_via_H(r);
      CHECK(a.achieved_precision >= 10);
      CHECK(a.value.difference_valuation(b.value) >= 10);
    }
  }
  // the H-sum by hand
  const auto r = request(5, 6, kOne, mpq_class(1, 3), mpq_class(1, 2), 10);
  const auto F = choose_F(kOne, 5);
  PadicScalar sum = PadicScalar::zero(5);
  for (long a = 1; a < F; ++a) sum += Hpq(r.s, a + 5 * r.t, F, r.q, 5, 10);
  CHECK(sum.difference_valuation(Lpq(r).value.scalar_part()) >= 10);
}

TEST_CASE("residue at s = 1") {
  for (const auto& chi : {kOne, DirichletCharacter::trivial(3), DirichletCharacter::trivial(10)}) {
    auto r = request(5, 6, chi, 1, 1, 12);
    const PadicScalar res = residue_at_one(r);
    for (int k : {3, 5, 7}) {
      r.s = 1 + ppow(5, k);
      const auto v = Lpq(r).value * PadicScalar::from_rational(5, ppow(5, k), 40);
      CHECK(v.difference_valuation(as_cyclo(v, res)) >= k);
    }
    r.s = 1;
    CHECK_THROWS_AS(Lpq(r), DomainError);
  }
  // primitive trivial character: [F]^{-1} (q^F - 1)/log q (1 - 1/p)
  const auto r = request(5, 6, kOne, 1, 0, 12);
  const PadicQ q(5, 6, 30);
  const PadicScalar closed =
      PadicScalar::from_rational(5, (qpow(6, 5) - 1) * mpq_class(4, 5) / qbracket(6, 5), 30) / q.log_q();
  CHECK(residue_at_one(r).difference_valuation(closed) >= 12);
  CHECK_THROWS_AS(residue_at_one(request(5, 6, character_by_index(3, 1), 1, 0, 12)), DomainError);
  // chi w^{-1} principal when chi is the Teichmueller character
  auto rw = request(5, 6, teichmuller_character(5), 1, 0, 12);
  CHECK_THROWS_AS(Lpq(rw, 1), DomainError);
  CHECK_NOTHROW(Lpq(rw));
}

TEST_CASE("value at s = 1 for non-principal characters") {
  for (const auto& chi : {character_by_index(3, 1), character_by_index(4, 1)}) {
    for (const mpq_class& t : {mpq_class(0), mpq_class(1, 2)}) {
      auto r = request(5, 6, chi, 1, t, 12);
      const auto at_one = Lpq_at_one(r);
      CHECK(at_one.achieved_precision >= 12);
      CHECK(Lpq(r).value.difference_valuation(at_one.value) >= 12);
      r.s = 1 + ppow(5, 8);
      const auto near = Lpq(r).value;
      CHECK(near.difference_valuation(at_one.value) >= 8);
      r.s = 1;
      // log term without its beta_0 weight
      CHECK(near.difference_valuation(Lpq_at_one(r, AtOneVariantP::kRemark).value) < 6);
      CHECK(near.difference_valuation(Lpq_at_one(r, AtOneVariantP::kTheorem).value) < 6);
      CHECK_THROWS_AS(Lpq_at_one(r, AtOneVariantP::kTheoremStray), ConvergenceError);
    }
  }
  CHECK_THROWS_AS(Lpq_at_one(request(5, 6, kOne, 1, 0, 10)), DomainError);
}

TEST_CASE("t-derivatives against finite differences") {
  const auto chi3 = character_by_index(3, 1);
  for (const auto& chi : {kOne, chi3}) {
    for (const mpq_class& s : {mpq_class(0), mpq_class(-1), mpq_class(1, 2), mpq_class(2)}) {
      const auto r = request(5, 6, chi, s, mpq_class(1, 3), 16);
      const auto d = t_partial(1, r);
      const auto fd = t_difference(r, ppow(5, 7));
      CHECK(d.corrected.difference_valuation(fd) >= 6);
      CHECK(d.literal.difference_valuation(fd) < 6);
    }
    for (const mpq_class& s : {mpq_class(0), mpq_class(-2), mpq_class(1, 2)}) {
      const mpq_class h = ppow(5, 6);
      auto r = request(5, 6, chi, s, mpq_class(1, 3), 28);
      LpqRequest up = r, down = r;
      up.t += h;
      down.t -= h;
      const auto second = (Lpq(up).value - Lpq(r).value * PadicScalar::from_rational(5, 2, 60) + Lpq(down).value) /
                          PadicScalar::from_rational(5, h * h, 60);
      r.target_precision = 12;
      CHECK(t_partial(2, r).corrected.difference_valuation(second) >= 4);
    }
  }
  // at s = 1 the residue term enters for a principal character
  const auto r = request(5, 6, chi3, 1, mpq_class(1, 3), 16);
  CHECK(t_partial(1, r).corrected.difference_valuation(t_difference(r, ppow(5, 7))) >= 6);
  const auto rw = request(5, 6, kOne, 0, mpq_class(1, 3), 16);
  CHECK(t_partial(1, rw).corrected.difference_valuation(t_difference(rw, ppow(5, 7))) >= 6);
}

TEST_CASE("printed closed values for the t-derivative at s = 1 - n") {
  const auto chi3 = character_by_index(3, 1);
  for (int n = 1; n <= 3; ++n) {
    for (const auto& chi : {kOne, chi3}) {
      const auto r = request(5, 6, chi, 1 - n, mpq_class(1, 3), 12);
      const auto d = t_partial(n, r);
      const auto printed = as_cyclo(d.corrected, t_partial_printed_value(n, r));
      CHECK(d.corrected.difference_valuation(printed) < 8);
    }
  }
  CHECK(t_partial_printed_value(2, request(5, 6, chi3, -1, 0, 10)).is_zero());
}

TEST_CASE("s-derivative at s = 0") {
  for (const auto& chi : {kOne, character_by_index(3, 1), character_by_index(4, 1)}) {
    for (const mpq_class& t : {mpq_class(0), mpq_class(1, 3)}) {
      const auto r = request(5, 6, chi, 0, t, 16);
      const auto d = derivative_s_at_zero(r);
      CHECK(d.achieved_precision >= 16);
      const int k = 9;
      LpqRequest rh = r, r0 = r;
      rh.s = ppow(5, k);
      rh.target_precision = r0.target_precision = 32;
      const auto fd = (Lpq(rh).value - Lpq(r0).value) / PadicScalar::from_rational(5, ppow(5, k), 60);
      CHECK(fd.difference_valuation(d.value) >= k - 1);
      CHECK(fd.difference_valuation(d.assemble(DaeheeVariant::kEq26, 0, r.q)) < 6);
      CHECK(fd.difference_valuation(d.assemble(DaeheeVariant::kEq27, 0, r.q)) < 6);
      // L(0,t) = q^{p*t} L(0,0), so two readings of the middle term agree
      CHECK(d.middle[0].difference_valuation(d.middle[1]) >= 16);
      if (t != 0) CHECK(fd.difference_valuation(d.assemble(DaeheeVariant::kCorrected, 2, r.q)) < 6);
    }
  }
  CHECK_THROWS_AS(derivative_s_at_zero(request(5, 6, DirichletCharacter::trivial(3), 0, 0, 10)), DomainError);
}

TEST_CASE("diamond gamma functions") {
  const PadicQ q(5, 1 + ppow(5, 8), 30);
  for (const mpq_class& x : {mpq_class(1, 5), mpq_class(7, 25), mpq_class(-3, 5)}) {
    const auto X = PadicScalar::from_rational(5, x, 20);
    const auto classical = diamond_gamma(X, 12);
    CHECK(classical.abs_precision() >= 12);
    CHECK(diamond_q_gamma(X, q, 1, 12).difference_valuation(classical) >= 6);
  }
  // G_p(x + 1) - G_p(x) = log x on |x| > 1
  const auto X = PadicScalar::from_rational(5, mpq_class(2, 25), 24);
  CHECK((diamond_gamma(X + 1, 12) - diamond_gamma(X, 12)).difference_valuation(plog(X)) >= 10);
  CHECK_THROWS_AS(diamond_gamma(PadicScalar::from_rational(5, 3, 10), 10), DomainError);
}

TEST_CASE("classical limit") {
  const auto chi3 = character_by_index(3, 1);
  const auto chi4 = character_by_index(4, 1);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& chi : {kOne, chi3, chi4}) {
      for (const mpq_class& t : {mpq_class(0), mpq_class(2, 3)}) {
        const auto r = request(5, 1, chi, 1 - n, t, 12);
        CHECK(classical_limit_Lp(r).value.difference_valuation(classical_interpolation_rhs(n, t, chi, 5, 14)) >= 12);
      }
    }
  }
  // Kubota-Leopoldt: L_5(-3, 1) = -(1 - 5^3) B_4 / 4 = -31/30
  const auto r = request(5, 1, kOne, -3, 0, 12);
  CHECK(classical_limit_Lp(r).value.scalar_part().difference_valuation(PadicScalar::from_rational(5, mpq_class(-31, 30), 20)) >=
        12);
  // q close to 1
  for (const mpq_class& s : {mpq_class(-3), mpq_class(1, 2)}) {
    auto rc = request(5, 1, chi3, s, mpq_class(1, 7), 12);
    auto rq = rc;
    rq.q = 1 + ppow(5, 8);
    CHECK(classical_limit_Lp(rc).value.difference_valuation(Lpq(rq).value) >= 6);
  }
  CHECK(bernoulli_polynomial(3, mpq_class(1, 2)) == 0);
  CHECK(bernoulli_polynomial(2, 0) == mpq_class(1, 6));
}

TEST_CASE("p = 2") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& chi : {kOne, character_by_index(3, 1)}) {
      const auto r = request(2, 5, chi, 1 - n, mpq_class(1, 3), 10);
      const auto L = Lpq(r);
      CHECK(L.achieved_precision >= 10);
      CHECK(L.value.difference_valuation(interpolation_rhs(n, r.t, chi, 2, 5, 12)) >= 10);
    }
  }
  const auto r = request(2, 5, character_by_index(3, 1), mpq_class(1, 3), 1, 10);
  CHECK(Lpq(r).value.difference_valuation(Lpq_via_H(r).value) >= 10);
  CHECK(choose_F(kOne, 2) == 4);
}

TEST_CASE("request checks") {
  auto r = request(5, 6, kOne, mpq_class(1, 5), 0, 10);
  CHECK_THROWS_AS(Lpq(r), DomainError);
  r.s = 0;
  r.F = 3;
  CHECK_THROWS_AS(Lpq(r), DomainError);
  r.F = 0;
  r.q = 2;
  CHECK_THROWS_AS(Lpq(r), DomainError);
  r.q = 6;
  r.p = 6;
  CHECK_THROWS_AS(Lpq(r), DomainError);
  CHECK(choose_F(character_by_index(4, 1), 5) == 20);
}
