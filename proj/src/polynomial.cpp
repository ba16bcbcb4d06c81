#include "qpadic/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "qpadic/integer.hpp"

namespace qpadic {
namespace poly {

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const IntPoly& a) { return static_cast<int>(a.size()) - 1; }

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

namespace {

IntPoly mul_schoolbook(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

std::size_t max_bits(const IntPoly& a) {
  std::size_t m = 0;
  for (const auto& c : a) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

// Evaluate at 2^bits; signed coefficients are fine because the unpacking
// below recovers balanced digits.
mpz_class pack(const IntPoly& a, std::size_t bits) {
  mpz_class r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
    r += a[i];
  }
  return r;
}

IntPoly unpack(mpz_class v, std::size_t bits, std::size_t len) {
  IntPoly r(len);
  mpz_class half = 1;
  mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), bits - 1);
  mpz_class full = half * 2;
  for (std::size_t i = 0; i < len; ++i) {
    mpz_class digit;
    mpz_fdiv_r_2exp(digit.get_mpz_t(), v.get_mpz_t(), bits);
    if (digit >= half) digit -= full;
    v -= digit;
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
    r[i] = digit;
  }
  return r;
}

}  // namespace

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r;
  if (std::min(a.size(), b.size()) < 12) {
    r = mul_schoolbook(a, b);
  } else {
    // Kronecker substitution: one big-integer product.
    std::size_t bits = max_bits(a) + max_bits(b) + 2;
    for (std::size_t n = std::min(a.size(), b.size()); n > 0; n >>= 1) ++bits;
    const mpz_class prod = pack(a, bits) * pack(b, bits);
    r = unpack(prod, bits, a.size() + b.size() - 1);
  }
  trim(r);
  return r;
}

IntPoly scale(const IntPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  IntPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

IntPoly shift(const IntPoly& a, int k) {
  if (a.empty()) return {};
  IntPoly r(static_cast<std::size_t>(k), mpz_class(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

IntPoly pow(const IntPoly& a, int e) {
  IntPoly result{1};
  IntPoly base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

mpz_class content(const IntPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divexact_scalar(IntPoly& a, const mpz_class& c) {
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& m) {
  const int dm = degree(m);
  IntPoly r(a);
  for (int i = degree(r); i >= dm; --i) {
    const mpz_class c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) r[static_cast<std::size_t>(i - dm + j)] -= c * m[static_cast<std::size_t>(j)];
  }
  if (static_cast<int>(r.size()) > dm) r.resize(static_cast<std::size_t>(std::max(dm, 0)));
  trim(r);
  return r;
}

IntPoly divexact_monic(const IntPoly& a, const IntPoly& m) {
  const int dm = degree(m);
  const int da = degree(a);
  if (da < dm) {
    if (a.empty()) return {};
    throw std::logic_error("divexact_monic: inexact division");
  }
  IntPoly r(a);
  IntPoly q(static_cast<std::size_t>(da - dm + 1));
  for (int i = da; i >= dm; --i) {
    const mpz_class c = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dm)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - dm + j)].get_mpz_t(), c.get_mpz_t(),
                 m[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (int i = 0; i < dm; ++i) {
    if (r[static_cast<std::size_t>(i)] != 0) throw std::logic_error("divexact_monic: inexact division");
  }
  trim(q);
  return q;
}

IntPoly substitute_power(const IntPoly& a, int g) {
  if (a.empty()) return {};
  IntPoly r(static_cast<std::size_t>(degree(a)) * static_cast<std::size_t>(g) + 1);
  for (std::size_t i = 0; i < a.size(); ++i) r[i * static_cast<std::size_t>(g)] = a[i];
  return r;
}

mpq_class evaluate(const IntPoly& a, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    r = r * x + mpq_class(a[i]);
  }
  r.canonicalize();
  return r;
}

IntPoly x_pow_minus_one(int n) {
  IntPoly r(static_cast<std::size_t>(n) + 1);
  r[0] = -1;
  r[static_cast<std::size_t>(n)] = 1;
  return r;
}

IntPoly bracket(int n) {
  if (n < 0) throw std::invalid_argument("poly::bracket: negative index");
  return IntPoly(static_cast<std::size_t>(n), mpz_class(1));
}

}  // namespace poly

const IntPoly& cyclotomic(std::int64_t d) {
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  if (d < 1) throw std::invalid_argument("cyclotomic: index must be positive");
  IntPoly r = poly::x_pow_minus_one(static_cast<int>(d));
  for (std::int64_t e : divisors(d)) {
    if (e == d) continue;
    r = poly::divexact_monic(r, cyclotomic(e));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(d, std::move(r)).first->second;
}

bool divisible_by_cyclotomic(const IntPoly& a, std::int64_t d) {
  if (a.empty()) return true;
  // Fold modulo x^d - 1 first; cyclotomic(d) divides x^d - 1.
  IntPoly folded(static_cast<std::size_t>(std::min<std::int64_t>(d, static_cast<std::int64_t>(a.size()))));
  for (std::size_t i = 0; i < a.size(); ++i) folded[i % static_cast<std::size_t>(d)] += a[i];
  poly::trim(folded);
  return poly::rem_monic(folded, cyclotomic(d)).empty();
}

}  // namespace qpadic
