#include "doctest.h"
#include "qpadic/archimedean.hpp"
#include "qpadic/error.hpp"

using namespace qpadic;

namespace {

ComplexEvalParams at(long double q) {
  ComplexEvalParams p;
  p.q = q;
  return p;
}

const mpq_class& rational_q(long double q) {
  static const mpq_class r03(3, 10), r04(2, 5), r05(1, 2);
  if (q == 0.3L) return r03;
  if (q == 0.4L) return r04;
  return r05;
}

}  // namespace

TEST_CASE("series beta numbers match the exact values") {
  for (long double q : {0.3L, 0.5L}) {
    const auto exact = beta_numbers_from_exact(rational_q(q), 10);
    const auto series = beta_numbers_series(Complex(q), 10);
    for (int n = 0; n <= 10; ++n) CHECK(std::abs(series[n] - exact[n]) < 1e-12L);
  }
  const auto b3 = beta_numbers_from_exact(mpq_class(1, 2), 6, 3);
  const auto s3 = beta_numbers_series(Complex(0.125L), 6);
  for (int n = 0; n <= 6; ++n) CHECK(std::abs(b3[n] - s3[n]) < 1e-12L);
}

TEST_CASE("q-zeta at negative integers") {
  const auto p = at(0.5L);
  const auto beta = beta_numbers_from_exact(mpq_class(1, 2), 6);
  for (int n = 1; n <= 6; ++n) {
    const Complex z = q_hurwitz_zeta(Complex(1 - n), 0.5L, p).value;
    const Complex ref = -beta_poly_complex(beta, n, Complex(0.5L), 0.5L, 1) / static_cast<long double>(n);
    CHECK(std::abs(z - ref) < 1e-8L);
    if (n >= 2) {
      const Complex z1 = q_hurwitz_zeta(Complex(1 - n), 1.0L, p).value;
      CHECK(std::abs(z1 + beta[n] / static_cast<long double>(n)) < 1e-8L);
    }
  }
  CHECK_THROWS_AS(q_hurwitz_zeta(Complex(1), 0.5L, p), DomainError);
  CHECK_THROWS_AS(q_hurwitz_zeta(Complex(2), 0.5L, at(1.0L)), DomainError);
}

TEST_CASE("q-zeta pole at s = 1") {
  const auto p = at(0.5L);
  const Complex res = (0.5L - 1.0L) / std::log(0.5L);
  const long double eps = 1e-5L;
  const Complex a = eps * q_hurwitz_zeta(Complex(1 + eps), 0.5L, p).value;
  const Complex b = (eps / 2) * q_hurwitz_zeta(Complex(1 + eps / 2), 0.5L, p).value;
  CHECK(std::abs(2.0L * b - a - res) < 1e-8L);
}

TEST_CASE("values at negative integers through characters") {
  const DirichletCharacter one;
  const auto chi3 = character_by_index(3, 1);
  const auto chi4 = character_by_index(4, 1);
  for (long double q : {0.3L, 0.5L}) {
    const auto p = at(q);
    for (const auto& chi : {one, chi3, chi4}) {
      for (long double x : {0.25L, 0.5L, 1.0L}) {
        for (int k = 1; k <= 5; ++k) {
          const Complex l = qL_two_variable(Complex(1 - k), x, chi, p).value;
          const Complex ref = -gen_beta_poly_complex(k, chi, rational_q(q), x) / static_cast<long double>(k);
          CHECK(std::abs(l - ref) < 1e-8L);
        }
      }
    }
  }
}

TEST_CASE("decomposition over residues") {
  const auto chi3 = character_by_index(3, 1);
  const auto p = at(0.4L);
  for (Complex s : {Complex(2.5L), Complex(0.5L, 2.0L), Complex(-1.5L)}) {
    const Complex direct = qL_two_variable(s, 0.3L, chi3, p).value;
    CHECK(std::abs(qL_via_zeta(s, 0.3L, chi3, p).value - direct) < 1e-8L);
    CHECK(std::abs(qL_via_partial(s, 0.3L, chi3, 3, p).value - direct) < 1e-8L);
    CHECK(std::abs(qL_via_partial(s, 0.3L, chi3, 6, p).value - direct) < 1e-8L);
  }
  // principal characters keep their pole part through the decomposition
  const DirichletCharacter one;
  for (const auto& chi : {one, DirichletCharacter::trivial(3)}) {
    const Complex s(2.5L, 0.5L);
    const Complex direct = qL_two_variable(s, 0.3L, chi, p).value;
    CHECK(std::abs(qL_via_zeta(s, 0.3L, chi, p).value - direct) < 1e-8L);
    CHECK(std::abs(qL_via_partial(s, 0.3L, chi, 6, p).value - direct) < 1e-8L);
  }
  // x = 0 is the one-variable series
  const Complex s(3);
  Complex one_var = 0;
  for (int n = 1; n < 400; ++n) one_var += character_value_complex(chi3(n)) / std::pow(cbracket(Complex(0.4L), n), s);
  const Complex l0 = qL_two_variable(s, 0, chi3, p).value;
  // L_q(s, 0|chi) weights by q^n; compare with the q^n-weighted one-variable sum
  Complex weighted = 0;
  for (int n = 1; n < 400; ++n)
    weighted += character_value_complex(chi3(n)) * std::pow(Complex(0.4L), n) / std::pow(cbracket(Complex(0.4L), n), s);
  CHECK(std::abs(l0 - weighted) < 1e-12L);
  CHECK(std::abs(l0 - one_var) > 1e-3L);
}

TEST_CASE("partial q-zeta") {
  const auto p = at(0.5L);
  for (Complex s : {Complex(2.0L), Complex(-0.5L, 1.0L)}) {
    CHECK(std::abs(partial_q_zeta(s, 2, 5, p).value - partial_q_zeta_scaled(s, 2, 5, p).value) < 1e-10L);
  }
  for (int n = 1; n <= 4; ++n) {
    const auto b = beta_numbers_from_exact(mpq_class(1, 2), n, 3);
    const Complex ref =
        -std::pow(cbracket(Complex(0.5L), 3), n - 1) / static_cast<long double>(n) * beta_poly_complex(b, n, 0.5L, 1, 3);
    CHECK(std::abs(partial_q_zeta(Complex(1 - n), 1, 3, p).value - ref) < 1e-10L);
  }
  // residue at s = 1 by Richardson extrapolation
  const long double eps = 1e-4L;
  const Complex r1 = eps * partial_q_zeta(Complex(1 + eps), 2, 5, p).value;
  const Complex r2 = (eps / 2) * partial_q_zeta(Complex(1 + eps / 2), 2, 5, p).value;
  CHECK(std::abs(2.0L * r2 - r1 - partial_q_zeta_residue(5, Complex(0.5L))) < 1e-6L);
  CHECK_THROWS_AS(partial_q_zeta(Complex(2), 0, 5, p), DomainError);
}

TEST_CASE("expansion at negative integers is exact") {
  const DirichletCharacter one;
  const auto chi3 = character_by_index(3, 1);
  const auto chi4 = character_by_index(4, 1);
  for (int n = 1; n <= 5; ++n) {
    const ExactQScalar nn(RationalFunction(mpq_class(1, n)));
    for (long x : {0L, 1L, 2L}) {
      for (const auto& chi : {chi3, chi4}) {
        const int f = static_cast<int>(chi.modulus());
        for (int F : {f, 2 * f}) {
          const auto lhs = qL_expansion_exact(n, chi, x, F);
          auto rhs = -gen_beta_poly_exact(n, chi, x);
          rhs *= RationalFunction(mpq_class(1, n));
          CHECK(lhs == rhs);
        }
      }
    }
    auto rhs = -beta_number_exact(n);
    rhs *= RationalFunction(mpq_class(1, n));
    CHECK(qL_expansion_exact(n, one, 0, 1) == rhs);
    CHECK(qL_expansion_exact(n, one, 0, 2) == rhs);
  }
}

TEST_CASE("numeric expansion agrees with the direct sum") {
  const auto chi3 = character_by_index(3, 1);
  const auto p = at(0.3L);
  for (Complex s : {Complex(3), Complex(0.5L, 1.0L), Complex(-2), Complex(1.5L)}) {
    const auto e = qL_expansion(s, 0, chi3, 3, p);
    const auto d = qL_two_variable(s, 0, chi3, p);
    CHECK(std::abs(e.value - d.value) < 1e-8L);
  }
  const DirichletCharacter one;
  CHECK(std::abs(qL_expansion(Complex(2.5L), 0.5L, one, 1, at(0.2L)).value -
                 qL_two_variable(Complex(2.5L), 0.5L, one, at(0.2L)).value) < 1e-8L);
  // the guard refuses a ratio close to 1
  CHECK_THROWS_AS(qL_expansion(Complex(2.5L), 0.05L, one, 1, at(0.5L)), ConvergenceError);
}

TEST_CASE("value at s = 1 for a non-principal character") {
  const auto chi3 = character_by_index(3, 1);
  const auto p = at(0.4L);
  for (long double x : {0.0L, 0.5L}) {
    const auto v = qL_at_one(x, chi3, 3, p);
    const Complex direct = qL_two_variable(Complex(1), x, chi3, p).value;
    const Complex near = qL_two_variable(Complex(1 + 1e-6L), x, chi3, p).value;
    CHECK(std::abs(v.value - direct) < 1e-10L);
    CHECK(std::abs(v.value - near) < 1e-5L);
    CHECK(std::abs(v.value.imag()) < 1e-15L);
    CHECK(std::abs(qL_at_one(x, chi3, 6, p).value - direct) < 1e-10L);
    // the log term without its beta_0 weight does not reproduce the series
    CHECK(std::abs(qL_at_one(x, chi3, 3, p, AtOneVariant::kLiteral).value - direct) > 1e-3L);
  }
  CHECK_THROWS_AS(qL_at_one(0.5L, DirichletCharacter(), 1, p), DomainError);
}

TEST_CASE("tail bounds cover a doubled truncation") {
  const auto chi3 = character_by_index(3, 1);
  for (long double q : {0.3L, 0.6L}) {
    auto p = at(q);
    p.tolerance = 1e-9L;
    const auto a = qL_two_variable(Complex(2.0L, 1.0L), 0.25L, chi3, p);
    p.tolerance = 1e-18L;
    const auto b = qL_two_variable(Complex(2.0L, 1.0L), 0.25L, chi3, p);
    CHECK(b.terms > a.terms);
    CHECK(std::abs(a.value - b.value) <= a.tail_bound + 1e-17L);
  }
}
