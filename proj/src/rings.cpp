#include "gql/rings.hpp"

#include <algorithm>

#include "gql/error.hpp"
#include "gql/finite_factor.hpp"
#include "gql/unipoly.hpp"

namespace gql {

BigRational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ') t += ch;
  if (t.empty()) throw ParseError("empty rational");
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  const auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  const std::string num = t.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-')
    throw ParseError("invalid rational \"" + text + "\"");
  const BigInt n{num}, d{den};
  if (d == 0) throw ParseError("zero denominator in \"" + text + "\"");
  BigRational r{n, d};
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& v) { return v.get_str(); }

IntegerRing::Elem IntegerRing::exact_div(const Elem& a, const Elem& b) const {
  if (b == 0) throw DomainError("division by zero");
  Elem q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw DomainError("inverse of zero");
  return 1 / a;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ull << 62)) throw DomainError("prime must be below 2^62");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::from_int(const BigInt& v) const {
  BigInt r = v % BigInt(static_cast<unsigned long>(p_));
  if (r < 0) r += BigInt(static_cast<unsigned long>(p_));
  return static_cast<Elem>(r.get_ui());
}

PrimeField::Elem PrimeField::from_i64(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  return powmod(a, p_ - 2, p_);
}

ExtField::ExtField(PrimeField base, std::vector<std::uint64_t> modulus)
    : base_(base), modulus_(std::move(modulus)) {
  while (!modulus_.empty() && modulus_.back() == 0) modulus_.pop_back();
  for (auto& v : modulus_) v %= base_.characteristic();
  if (modulus_.size() < 2) throw DomainError("extension modulus must have degree >= 1");
  if (modulus_.back() != 1) throw DomainError("extension modulus must be monic");
  k_ = static_cast<int>(modulus_.size()) - 1;
  if (!ff::is_irreducible(base_, FpPoly(modulus_)))
    throw DomainError("extension modulus is not irreducible");
}

BigInt ExtField::order() const {
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), base_.characteristic(), static_cast<unsigned long>(k_));
  return q;
}

ExtField::Elem ExtField::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

ExtField::Elem ExtField::generator() const {
  Elem e = zero();
  if (k_ == 1) {
    e[0] = base_.neg(modulus_[0]);
  } else {
    e[1] = 1;
  }
  return e;
}

ExtField::Elem ExtField::embed(std::uint64_t a) const {
  Elem e = zero();
  e[0] = a % base_.characteristic();
  return e;
}

bool ExtField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t v) { return v == 0; });
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const auto k = static_cast<std::size_t>(k_);
  const std::uint64_t p = base_.characteristic();
  std::vector<unsigned __int128> acc(2 * k - 1, 0);
  // Accumulate in 128 bits and reduce lazily; each product is below 2^124.
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
      if (acc[i + j] >= (static_cast<unsigned __int128>(1) << 126)) acc[i + j] %= p;
    }
  }
  std::vector<std::uint64_t> r(2 * k - 1);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
  for (std::size_t d = r.size(); d-- > k;) {
    const std::uint64_t top = r[d];
    if (top == 0) continue;
    r[d] = 0;
    for (std::size_t i = 0; i < k; ++i)
      r[d - k + i] = base_.sub(r[d - k + i], base_.mul(top, modulus_[i]));
  }
  r.resize(k);
  return r;
}

ExtField::Elem ExtField::pow(const Elem& a, const BigInt& e) const {
  Elem result = one();
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in extension field");
  auto inverse = poly::inv_mod(base_, poly::make(base_, a), FpPoly(modulus_));
  Elem r = zero();
  for (std::size_t i = 0; i < inverse.c.size(); ++i) r[i] = inverse.c[i];
  return r;
}

ExtField::Elem ExtField::pth_root(const Elem& a) const {
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), base_.characteristic(), static_cast<unsigned long>(k_ - 1));
  return pow(a, e);
}

ExtField::Elem ExtField::random(std::mt19937_64& rng) const {
  Elem e(static_cast<std::size_t>(k_));
  for (auto& v : e) v = base_.random(rng);
  return e;
}

bool ExtField::in_prime_field(const Elem& a) const {
  return std::all_of(a.begin() + 1, a.end(), [](std::uint64_t v) { return v == 0; });
}

std::string ExtField::str(const Elem& a) const {
  if (in_prime_field(a)) return std::to_string(a[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

}  // namespace gql
