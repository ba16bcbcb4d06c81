#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qpadic/cyclo.hpp"
#include "qpadic/padic.hpp"

namespace qpadic {

/// A root of unity exp(2 pi i k/m) stored symbolically, or zero.
struct CharValue {
  bool zero = false;
  long k = 0;
  long m = 1;

  static CharValue zero_value() { return {true, 0, 1}; }
  static CharValue root(long k, long m);

  bool is_one() const { return !zero && k == 0; }
  /// Reduced order of the root (1 for the value 1).
  long exact_order() const;
  /// Real value for real characters; throws otherwise.
  int as_sign() const;

  CharValue operator*(const CharValue& o) const;
  CharValue pow(long e) const;
  bool operator==(const CharValue& o) const;
  bool operator!=(const CharValue& o) const { return !(*this == o); }
  std::string to_string() const;
};

/// Structure of (Z/fZ)^*: generators g_j of orders n_j with
/// (Z/fZ)^* = prod <g_j>, and a discrete-log table.
class UnitGroup {
 public:
  static std::shared_ptr<const UnitGroup> get(std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<std::int64_t>& generators() const { return gens_; }
  const std::vector<long>& orders() const { return orders_; }
  std::int64_t size() const { return size_; }
  /// Exponent of the group (lcm of the generator orders).
  long exponent() const { return exponent_; }
  /// Exponent vector of a unit a.
  const std::vector<long>& log(std::int64_t a) const;

 private:
  explicit UnitGroup(std::int64_t modulus);

  std::int64_t modulus_;
  std::vector<std::int64_t> gens_;
  std::vector<long> orders_;
  std::int64_t size_ = 1;
  long exponent_ = 1;
  std::vector<std::vector<long>> log_table_;  // indexed by residue
};

/// Dirichlet character modulo f given by the images chi(g_j) = exp(2 pi i k_j/n_j).
class DirichletCharacter {
 public:
  DirichletCharacter();  // trivial character mod 1
  DirichletCharacter(std::int64_t modulus, std::vector<long> images);

  static DirichletCharacter trivial(std::int64_t modulus);
  /// Character of the given modulus agreeing with `values(a)` on units.
  template <class F>
  static DirichletCharacter from_function(std::int64_t modulus, F values);

  std::int64_t modulus() const { return modulus_; }
  const std::vector<long>& images() const { return images_; }
  long order() const { return order_; }
  std::int64_t conductor() const { return conductor_; }
  bool is_primitive() const { return conductor_ == modulus_; }
  /// Trivial on units (after passing to the primitive character this is the
  /// character mod 1).
  bool is_principal() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }

  CharValue operator()(std::int64_t a) const;
  /// Sign for real characters (0 off units).
  int sign(std::int64_t a) const;

  DirichletCharacter primitive() const;
  DirichletCharacter induce(std::int64_t multiple) const;
  DirichletCharacter operator*(const DirichletCharacter& o) const;
  DirichletCharacter pow(long e) const;
  bool operator==(const DirichletCharacter& o) const;

  /// Position in enumerate_characters(modulus).
  long index() const;
  std::string label() const;

 private:
  std::int64_t modulus_ = 1;
  std::vector<long> images_;
  long order_ = 1;
  std::int64_t conductor_ = 1;
  void finish();
};

/// All phi(f) characters mod f. Order: index = sum_j k_j * prod_{i<j} n_i
/// over the generator list of UnitGroup::get(f); index 0 is trivial.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus);
DirichletCharacter character_by_index(std::int64_t modulus, long index);

/// The Teichmueller character mod p*: w(a) is the root of unity congruent
/// to a mod p (mod 4 when p = 2).
DirichletCharacter teichmuller_character(std::int64_t p);

/// chi * w^(-n) as a character mod lcm(f, p*).
DirichletCharacter twist_teichmuller(const DirichletCharacter& chi, long n, std::int64_t p);

/// Order of the cyclotomic ring that holds the p-adic images of chi:
/// 1 when every value lies in Z_p, else the character order.
std::int64_t value_ring_order(const DirichletCharacter& chi, std::int64_t p);

/// p-adic image of a value of a character whose values live in the ring of
/// the given order (see value_ring_order).
CycloScalar embed_padic(const CharValue& v, std::int64_t ring_order, std::int64_t p, int precision);
/// Convenience: the value itself when it lies in Z_p.
PadicScalar embed_padic_scalar(const CharValue& v, std::int64_t p, int precision);

// ---------------------------------------------------------------------------

template <class F>
DirichletCharacter DirichletCharacter::from_function(std::int64_t modulus, F values) {
  auto group = UnitGroup::get(modulus);
  std::vector<long> images;
  for (std::size_t j = 0; j < group->generators().size(); ++j) {
    const CharValue v = values(group->generators()[j]);
    const long n = group->orders()[j];
    // v = exp(2 pi i k/m) must be an n-th root of unity
    if (v.zero || (v.k * n) % v.m != 0) throw std::logic_error("from_function: value is not a root of the generator order");
    images.push_back(v.k * n / v.m);
  }
  return DirichletCharacter(modulus, std::move(images));
}

}  // namespace qpadic
