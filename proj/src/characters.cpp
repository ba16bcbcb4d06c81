#include "qpadic/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qpadic/error.hpp"
#include "qpadic/integer.hpp"
#include "qpadic/padic_functions.hpp"

namespace qpadic {

CharValue CharValue::root(long k, long m) {
  if (m < 1) throw std::logic_error("CharValue: order must be positive");
  k %= m;
  if (k < 0) k += m;
  return {false, k, m};
}

long CharValue::exact_order() const {
  if (zero) return 0;
  return m / std::gcd(k, m);
}

int CharValue::as_sign() const {
  if (zero) return 0;
  const long o = exact_order();
  if (o == 1) return 1;
  if (o == 2) return -1;
  throw DomainError("character value " + to_string() + " is not real");
}

CharValue CharValue::operator*(const CharValue& o) const {
  if (zero || o.zero) return zero_value();
  const long l = std::lcm(m, o.m);
  return root(k * (l / m) + o.k * (l / o.m), l);
}

CharValue CharValue::pow(long e) const {
  if (zero) return e == 0 ? root(0, 1) : zero_value();
  const long ee = ((e % m) + m) % m;
  return root(k * ee, m);
}

bool CharValue::operator==(const CharValue& o) const {
  if (zero || o.zero) return zero == o.zero;
  return k * o.m == o.k * m;
}

std::string CharValue::to_string() const {
  if (zero) return "0";
  const long o = exact_order();
  if (o == 1) return "1";
  if (o == 2) return "-1";
  const long g = std::gcd(k, m);
  std::ostringstream os;
  os << "e(" << k / g << "/" << m / g << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

std::shared_ptr<const UnitGroup> UnitGroup::get(std::int64_t modulus) {
  static std::mutex mu;
  static std::map<std::int64_t, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(modulus);
  if (it != cache.end()) return it->second;
  auto g = std::shared_ptr<const UnitGroup>(new UnitGroup(modulus));
  cache.emplace(modulus, g);
  return g;
}

UnitGroup::UnitGroup(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw DomainError("modulus must be positive");
  for (auto [p, e] : factorize(modulus)) {
    std::int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    const std::int64_t rest = modulus / pe;
    auto lift = [&](std::int64_t r) {
      if (rest == 1) return mod(r, pe);
      // g = r mod pe, g = 1 mod rest
      const std::int64_t inv = inverse_mod(mpz_class(static_cast<long>(mod(rest, pe))), mpz_class(static_cast<long>(pe))).get_si();
      const std::int64_t t = mod(static_cast<std::int64_t>(static_cast<__int128>(mod(r - 1, pe)) * inv % pe), pe);
      return 1 + rest * t;
    };
    if (p == 2) {
      if (e >= 2) {
        gens_.push_back(lift(pe - 1));
        orders_.push_back(2);
      }
      if (e >= 3) {
        gens_.push_back(lift(5));
        orders_.push_back(static_cast<long>(pe / 4));
      }
    } else {
      gens_.push_back(lift(primitive_root(pe)));
      orders_.push_back(static_cast<long>(pe / p * (p - 1)));
    }
  }
  for (long n : orders_) {
    size_ *= n;
    exponent_ = std::lcm(exponent_, n);
  }
  log_table_.assign(static_cast<std::size_t>(modulus), {});
  std::vector<long> e(gens_.size(), 0);
  for (std::int64_t idx = 0; idx < size_; ++idx) {
    std::int64_t x = 1 % modulus;
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      for (long r = 0; r < e[j]; ++r) x = static_cast<std::int64_t>(static_cast<__int128>(x) * gens_[j] % modulus);
    }
    log_table_[static_cast<std::size_t>(x)] = e;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (++e[j] < orders_[j]) break;
      e[j] = 0;
    }
  }
}

const std::vector<long>& UnitGroup::log(std::int64_t a) const {
  const std::int64_t r = mod(a, modulus_);
  if (gcd(r, modulus_) != 1 && modulus_ != 1) throw DomainError("discrete log of a non-unit");
  return log_table_[static_cast<std::size_t>(r)];
}

// ---------------------------------------------------------------------------

DirichletCharacter::DirichletCharacter() { finish(); }

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<long> images)
    : modulus_(modulus), images_(std::move(images)) {
  auto group = UnitGroup::get(modulus);
  if (images_.size() != group->generators().size()) {
    throw DomainError("character mod " + std::to_string(modulus) + " needs " +
                      std::to_string(group->generators().size()) + " generator images");
  }
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const long n = group->orders()[j];
    images_[j] = ((images_[j] % n) + n) % n;
  }
  finish();
}

void DirichletCharacter::finish() {
  auto group = UnitGroup::get(modulus_);
  order_ = 1;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const long n = group->orders()[j];
    order_ = std::lcm(order_, n / std::gcd(images_[j], n));
  }
  conductor_ = modulus_;
  for (std::int64_t d : divisors(modulus_)) {
    bool ok = true;
    for (std::int64_t a = 1 + d; a <= modulus_ && ok; a += d) {
      if (gcd(a, modulus_) != 1) continue;
      if (!(*this)(a).is_one()) ok = false;
    }
    if (ok) {
      conductor_ = d;
      break;
    }
  }
}

DirichletCharacter DirichletCharacter::trivial(std::int64_t modulus) {
  const auto group = UnitGroup::get(modulus);
  return DirichletCharacter(modulus, std::vector<long>(group->generators().size(), 0));
}

CharValue DirichletCharacter::operator()(std::int64_t a) const {
  if (gcd(mod(a, modulus_), modulus_) != 1) return CharValue::zero_value();
  auto group = UnitGroup::get(modulus_);
  const auto& e = group->log(a);
  long k = 0;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const long n = group->orders()[j];
    const long g = std::gcd(images_[j], n);
    const long kj = images_[j] / g;
    const long nj = n / g;
    k = (k + kj * (e[j] % nj) % order_ * (order_ / nj)) % order_;
  }
  return CharValue::root(k, order_);
}

int DirichletCharacter::sign(std::int64_t a) const { return (*this)(a).as_sign(); }

DirichletCharacter DirichletCharacter::primitive() const {
  const std::int64_t c = conductor_;
  return from_function(c, [&](std::int64_t b) {
    for (std::int64_t a = mod(b, c);; a += c) {
      if (gcd(a, modulus_) == 1) return (*this)(a);
    }
  });
}

DirichletCharacter DirichletCharacter::induce(std::int64_t multiple) const {
  if (multiple % modulus_ != 0) throw DomainError("induce: target modulus must be a multiple");
  return from_function(multiple, [&](std::int64_t a) { return (*this)(a); });
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
  const std::int64_t l = lcm(modulus_, o.modulus_);
  const DirichletCharacter a = induce(l);
  const DirichletCharacter b = o.induce(l);
  std::vector<long> img(a.images_.size());
  for (std::size_t j = 0; j < img.size(); ++j) img[j] = a.images_[j] + b.images_[j];
  return DirichletCharacter(l, img);
}

DirichletCharacter DirichletCharacter::pow(long e) const {
  std::vector<long> img(images_);
  for (auto& k : img) k *= e;
  return DirichletCharacter(modulus_, img);
}

bool DirichletCharacter::operator==(const DirichletCharacter& o) const {
  return modulus_ == o.modulus_ && images_ == o.images_;
}

long DirichletCharacter::index() const {
  auto group = UnitGroup::get(modulus_);
  long idx = 0;
  long radix = 1;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    idx += images_[j] * radix;
    radix *= group->orders()[j];
  }
  return idx;
}

std::string DirichletCharacter::label() const {
  return "chi_" + std::to_string(modulus_) + "[" + std::to_string(index()) + "]";
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus) {
  auto group = UnitGroup::get(modulus);
  std::vector<DirichletCharacter> out;
  for (long idx = 0; idx < group->size(); ++idx) out.push_back(character_by_index(modulus, idx));
  return out;
}

DirichletCharacter character_by_index(std::int64_t modulus, long index) {
  auto group = UnitGroup::get(modulus);
  if (index < 0 || index >= group->size()) {
    throw DomainError("character index " + std::to_string(index) + " out of range for modulus " +
                      std::to_string(modulus));
  }
  std::vector<long> img;
  for (long n : group->orders()) {
    img.push_back(index % n);
    index /= n;
  }
  return DirichletCharacter(modulus, img);
}

DirichletCharacter teichmuller_character(std::int64_t p) {
  if (!is_prime(p)) throw DomainError("teichmuller character needs a prime");
  // UnitGroup(p) uses the smallest primitive root; UnitGroup(4) uses -1.
  return DirichletCharacter(p_star(p), {1});
}

DirichletCharacter twist_teichmuller(const DirichletCharacter& chi, long n, std::int64_t p) {
  return chi * teichmuller_character(p).pow(-n);
}

std::int64_t value_ring_order(const DirichletCharacter& chi, std::int64_t p) {
  const long m = chi.order();
  if (m <= 2 || (p != 2 && (p - 1) % m == 0)) return 1;
  if (m % p == 0) {
    throw DomainError("character order " + std::to_string(m) + " is divisible by p = " + std::to_string(p) +
                      "; ramified value rings are not supported");
  }
  return m;
}

PadicScalar embed_padic_scalar(const CharValue& v, std::int64_t p, int precision) {
  if (v.zero) return PadicScalar::zero(p, precision);
  const long o = v.exact_order();
  if (o == 1) return PadicScalar::one(p, precision);
  if (o == 2) return PadicScalar::from_rational(p, -1, precision);
  if (p != 2 && (p - 1) % o == 0) {
    const long g = v.m / o;
    const long k = v.k / g;  // value = exp(2 pi i k/o)
    const std::int64_t e = k * ((p - 1) / o);
    std::int64_t x = 1;
    const std::int64_t root = primitive_root(p);
    for (std::int64_t i = 0; i < e; ++i) x = x * root % p;
    return teichmuller(x, p, precision);
  }
  throw DomainError("value " + v.to_string() + " does not lie in Z_" + std::to_string(p));
}

CycloScalar embed_padic(const CharValue& v, std::int64_t ring_order, std::int64_t p, int precision) {
  if (ring_order == 1) return CycloScalar::constant(1, embed_padic_scalar(v, p, precision));
  if (v.zero) {
    CycloScalar z = CycloScalar::zero(ring_order, p);
    return z;
  }
  if ((v.k * ring_order) % v.m != 0) {
    throw DomainError("value " + v.to_string() + " is not a root of unity of order dividing " +
                      std::to_string(ring_order));
  }
  return CycloScalar::generator_power(ring_order, p, v.k * ring_order / v.m, precision);
}

}  // namespace qpadic
