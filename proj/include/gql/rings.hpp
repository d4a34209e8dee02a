#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace gql {

using BigInt = mpz_class;
/// Canonical rationals: lowest terms, positive denominator, zero is 0/1.
using BigRational = mpq_class;

BigRational parse_rational(const std::string& text);
std::string to_string(const BigInt& v);
std::string to_string(const BigRational& v);

/// The integers, as a ring with exact division.
struct IntegerRing {
  using Elem = BigInt;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& v) const { return v; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  /// a / b, which must be exact.
  Elem exact_div(const Elem& a, const Elem& b) const;
  bool divides(const Elem& b, const Elem& a) const { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }
  std::string str(const Elem& a) const { return to_string(a); }
};

struct RationalField {
  using Elem = BigRational;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& v) const { return BigRational(v); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }
  std::string str(const Elem& a) const { return to_string(a); }
};

bool is_prime(std::uint64_t n);

/// F_p for a prime p < 2^62, elements stored reduced in [0, p).
class PrimeField {
public:
  using Elem = std::uint64_t;

  /// Throws DomainError unless p is prime and below 2^62.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const noexcept { return p_; }
  int extension_degree() const noexcept { return 1; }
  BigInt order() const { return BigInt(static_cast<unsigned long>(p_)); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const BigInt& v) const;
  Elem from_i64(std::int64_t v) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Throws DomainError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem exact_div(Elem a, Elem b) const { return div(a, b); }
  Elem pth_root(Elem a) const { return a; }
  Elem random(std::mt19937_64& rng) const { return rng() % p_; }
  std::string str(Elem a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
  std::uint64_t p_;
};

/// F_{p^k} = F_p[t] / (modulus). Elements are coefficient vectors of length k,
/// ascending in t.
class ExtField {
public:
  using Elem = std::vector<std::uint64_t>;

  /// modulus: monic, ascending coefficients, degree k >= 1; irreducibility is
  /// verified and a DomainError raised otherwise.
  ExtField(PrimeField base, std::vector<std::uint64_t> modulus);

  const PrimeField& base() const noexcept { return base_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return base_.characteristic(); }
  int extension_degree() const noexcept { return k_; }
  BigInt order() const;

  Elem zero() const { return Elem(static_cast<std::size_t>(k_), 0); }
  Elem one() const;
  /// The class of t.
  Elem generator() const;
  Elem embed(std::uint64_t a) const;
  Elem from_int(const BigInt& v) const { return embed(base_.from_int(v)); }
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, const BigInt& e) const;
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }
  Elem pth_root(const Elem& a) const;
  Elem random(std::mt19937_64& rng) const;
  /// True when a lies in the prime subfield.
  bool in_prime_field(const Elem& a) const;
  std::string str(const Elem& a) const;

private:
  PrimeField base_;
  std::vector<std::uint64_t> modulus_;
  int k_;
};

}  // namespace gql
