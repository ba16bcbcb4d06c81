#include <random>

#include "doctest.h"
#include "qpadic/characters.hpp"
#include "qpadic/cyclo.hpp"
#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/padic_functions.hpp"
#include "qpadic/polynomial.hpp"
#include "qpadic/qparam.hpp"

using namespace qpadic;

namespace {

IntPoly P(std::initializer_list<long> c) {
  IntPoly r;
  for (long x : c) r.emplace_back(x);
  poly::trim(r);
  return r;
}

IntPoly random_poly(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  IntPoly r;
  for (int i = 0; i < n; ++i) r.emplace_back(d(rng));
  poly::trim(r);
  return r;
}

IntPoly schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly::trim(r);
  return r;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P({-1, 1}));
  CHECK(cyclotomic(2) == P({1, 1}));
  CHECK(cyclotomic(6) == P({1, -1, 1}));
  CHECK(cyclotomic(12) == P({1, 0, -1, 0, 1}));
  // x^n - 1 is the product over divisors
  for (int n : {8, 15, 30, 105}) {
    IntPoly prod = P({1});
    for (auto d : divisors(n)) prod = poly::mul(prod, cyclotomic(d));
    CHECK(prod == poly::x_pow_minus_one(n));
  }
  // 105 is the first with a coefficient -2
  bool has_two = false;
  for (const auto& c : cyclotomic(105)) has_two |= (c == -2);
  CHECK(has_two);
}

TEST_CASE("polynomial multiplication matches schoolbook") {
  std::mt19937_64 rng(7);
  for (int n : {3, 12, 40, 200}) {
    const auto a = random_poly(rng, n);
    const auto b = random_poly(rng, n + 5);
    CHECK(poly::mul(a, b) == schoolbook(a, b));
  }
}

TEST_CASE("division and divisibility") {
  const auto a = poly::mul(cyclotomic(9), P({3, 0, 2}));
  CHECK(poly::divexact_monic(a, cyclotomic(9)) == P({3, 0, 2}));
  CHECK(divisible_by_cyclotomic(a, 9));
  CHECK_FALSE(divisible_by_cyclotomic(a, 3));
  CHECK(poly::rem_monic(P({0, 0, 0, 1}), cyclotomic(3)) == P({1}));
  CHECK(poly::substitute_power(P({1, 2}), 3) == P({1, 0, 0, 2}));
  CHECK(poly::evaluate(poly::bracket(4), mpq_class(2)) == 15);
  CHECK(poly::content(P({6, -9, 12})) == 3);
}

TEST_CASE("cyclotomic value ring") {
  // order 3 over Z_5: X^2 + X + 1 = 0
  const auto x = CycloScalar::generator_power(3, 5, 1, 10);
  CHECK(x.degree() == 2);
  const auto s = x * x + x + PadicScalar::one(5, 10);
  CHECK(s.is_zero());
  CHECK(x.pow(3).is_scalar());
  CHECK(x.pow(3).scalar_part().agrees_with(PadicScalar::one(5, 10), 10));
  // order 2 lives in Z_p
  const auto m = CycloScalar::generator_power(2, 7, 1, 8);
  CHECK(m.degree() == 1);
  CHECK(m.scalar_part().agrees_with(PadicScalar::from_rational(7, -1, 8), 8));
  CHECK_THROWS_AS(CycloScalar::generator_power(5, 5, 1, 5), DomainError);
}

TEST_CASE("q parameter parsing and brackets") {
  const auto q = QParameter::parse("1+p^2", 5);
  CHECK(q.value == 26);
  CHECK(QParameter::parse("1+7^1", std::nullopt).value == 8);
  CHECK(QParameter::parse("1+5", std::nullopt).value == 6);
  CHECK(QParameter::parse("1+p", 7).value == 8);
  CHECK(QParameter::parse("0.5", std::nullopt).value == mpq_class(1, 2));
  CHECK(QParameter::parse("-3/6", std::nullopt).value == mpq_class(-1, 2));
  CHECK_THROWS_AS(QParameter::parse("x", std::nullopt), DomainError);
  CHECK_THROWS_AS(QParameter::parse("2", 5).validate_padic(false), DomainError);
  CHECK_THROWS_AS(QParameter::parse("1", 5).validate_padic(false), DomainError);
  CHECK_NOTHROW(QParameter::parse("1", 5).validate_padic(true));
  CHECK_THROWS_AS(QParameter::parse("3", 2).validate_padic(false), DomainError);

  const PadicQ pq(5, 6, 12);
  CHECK(pq.bracket(2).representative() == 7);
  CHECK(pq.bracket(5).valuation() >= 1);
  CHECK(qbracket(mpq_class(1), 7) == 7);
  // [x + y] = [x] + q^x [y] with p-adic x, y
  const auto x = PadicScalar::from_rational(5, mpq_class(3, 7), 12);
  const auto y = PadicScalar::from_rational(5, mpq_class(-2, 9), 12);
  const auto lhs = pq.bracket(x + y);
  const auto rhs = pq.bracket(x) + pq.pow(x) * pq.bracket(y);
  CHECK(lhs.difference_valuation(rhs) >= 10);
  // integer exponents through the exp/log path agree with exact powers
  CHECK(pq.pow(PadicScalar::from_rational(5, 4, 12)).difference_valuation(pq.pow(4)) >= 10);
  // <a> is a 1-unit
  const auto t = PadicScalar::zero(5);
  const auto ab = angle_bracket(2, pq, t);
  CHECK((ab - 1).valuation() >= 1);
  CHECK_THROWS_AS(angle_bracket(5, pq, t), DomainError);
}

TEST_CASE("unit groups and character enumeration") {
  for (std::int64_t f : {1, 3, 4, 5, 8, 12, 15, 16, 21, 24}) {
    const auto g = UnitGroup::get(f);
    CHECK(g->size() == euler_phi(f));
    const auto chars = enumerate_characters(f);
    CHECK(chars.size() == static_cast<std::size_t>(euler_phi(f)));
    CHECK(chars[0].is_principal());
    for (std::size_t i = 0; i < chars.size(); ++i) {
      CHECK(chars[i].index() == static_cast<long>(i));
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(chars[i] == chars[j]);
    }
    // orthogonality: sum over a of chi(a) vanishes for nontrivial chi (real case)
    for (const auto& chi : chars) {
      if (!chi.is_real()) continue;
      long s = 0;
      for (std::int64_t a = 0; a < f; ++a) s += chi.sign(a);
      CHECK(s == (chi.is_principal() ? euler_phi(f) : 0));
    }
    // multiplicativity
    for (const auto& chi : chars) {
      for (std::int64_t a = 1; a < f; ++a)
        for (std::int64_t b = 1; b < f; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
    }
  }
}

TEST_CASE("quadratic characters and conductors") {
  const auto chi3 = character_by_index(3, 1);
  CHECK(chi3.sign(1) == 1);
  CHECK(chi3.sign(2) == -1);
  CHECK(chi3.sign(3) == 0);
  CHECK(chi3.conductor() == 3);
  CHECK(chi3.is_primitive());

  const auto ind = chi3.induce(12);
  CHECK(ind.modulus() == 12);
  CHECK(ind.conductor() == 3);
  CHECK_FALSE(ind.is_primitive());
  CHECK(ind.primitive() == chi3);
  CHECK(ind.sign(5) == -1);
  CHECK(ind.sign(2) == 0);

  // character mod 1 takes the value 1 at 0
  const DirichletCharacter one;
  CHECK(one(0).is_one());
  CHECK(DirichletCharacter::trivial(4).primitive() == one);

  // chi_4 is odd
  const auto chi4 = character_by_index(4, 1);
  CHECK(chi4.sign(3) == -1);
  CHECK(chi4.conductor() == 4);
}

TEST_CASE("teichmueller character and twists") {
  for (std::int64_t p : {3, 5, 7, 13}) {
    const auto w = teichmuller_character(p);
    CHECK(w.order() == p - 1);
    CHECK(w.is_primitive());
    const auto ring = value_ring_order(w, p);
    CHECK(ring == 1);
    for (std::int64_t a = 1; a < p; ++a) {
      const auto v = embed_padic_scalar(w(a), p, 10);
      CHECK(v.agrees_with(teichmuller(a, p, 10), 10));
    }
  }
  // chi trivial, n = 2, p = 5: w^-2 is the quadratic character mod 5
  const auto tw = twist_teichmuller(DirichletCharacter(), 2, 5);
  CHECK(tw.order() == 2);
  CHECK(tw.sign(2) == -1);
  CHECK(tw.sign(4) == 1);
  // p = 2: w is the odd character mod 4
  const auto w2 = teichmuller_character(2);
  CHECK(w2.modulus() == 4);
  CHECK(w2.sign(3) == -1);
}

TEST_CASE("embedding of non-real values") {
  // order 3 characters mod 7 over Z_5 need the quadratic extension
  const auto chi = character_by_index(7, 2);
  CHECK(chi.order() == 3);
  const auto ring = value_ring_order(chi, 5);
  CHECK(ring == 3);
  // the embedding is a homomorphism on values
  for (std::int64_t a = 1; a < 7; ++a)
    for (std::int64_t b = 1; b < 7; ++b) {
      const auto lhs = embed_padic(chi(a * b), ring, 5, 10);
      const auto rhs = embed_padic(chi(a), ring, 5, 10) * embed_padic(chi(b), ring, 5, 10);
      CHECK((lhs - rhs).is_zero());
    }
  // but over Z_7 order 3 divides p - 1
  CHECK(value_ring_order(character_by_index(9, 2), 7) == 1);
  CHECK_THROWS_AS(value_ring_order(character_by_index(7, 2), 3), DomainError);
}
