#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gql/error.hpp"
#include "gql/rings.hpp"

namespace gql {

/// Dense univariate polynomial, coefficients ascending in degree. The zero
/// polynomial has no coefficients; otherwise the leading one is nonzero.
/// Arithmetic lives in free functions taking the coefficient ring, since
/// prime-field and extension-field rings carry runtime state.
template <class Ring>
struct UniPoly {
  using Elem = typename Ring::Elem;
  std::vector<Elem> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<Elem> coeffs) : c(std::move(coeffs)) {}

  bool is_zero() const { return c.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Elem& lead() const { return c.back(); }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;
};

using ZPoly = UniPoly<IntegerRing>;
using QPoly = UniPoly<RationalField>;
using FpPoly = UniPoly<PrimeField>;
using FqPoly = UniPoly<ExtField>;

namespace poly {

template <class R>
UniPoly<R>& trim(const R& ring, UniPoly<R>& f) {
  while (!f.c.empty() && ring.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

template <class R>
UniPoly<R> make(const R& ring, std::vector<typename R::Elem> coeffs) {
  UniPoly<R> f(std::move(coeffs));
  trim(ring, f);
  return f;
}

template <class R>
UniPoly<R> constant(const R& ring, typename R::Elem v) {
  return make(ring, {std::move(v)});
}

template <class R>
UniPoly<R> one(const R& ring) {
  return constant(ring, ring.one());
}

/// x^n
template <class R>
UniPoly<R> monomial(const R& ring, int n, typename R::Elem coeff) {
  std::vector<typename R::Elem> c(static_cast<std::size_t>(n) + 1, ring.zero());
  c.back() = std::move(coeff);
  return make(ring, std::move(c));
}

template <class R>
UniPoly<R> x(const R& ring) {
  return monomial(ring, 1, ring.one());
}

template <class R>
bool is_one(const R& ring, const UniPoly<R>& f) {
  return f.degree() == 0 && ring.eq(f.c[0], ring.one());
}

template <class R>
UniPoly<R> add(const R& ring, const UniPoly<R>& f, const UniPoly<R>& g) {
  UniPoly<R> r;
  r.c.resize(std::max(f.c.size(), g.c.size()), ring.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
  for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = ring.add(r.c[i], g.c[i]);
  return trim(ring, r);
}

template <class R>
UniPoly<R> neg(const R& ring, const UniPoly<R>& f) {
  UniPoly<R> r = f;
  for (auto& v : r.c) v = ring.neg(v);
  return r;
}

template <class R>
UniPoly<R> sub(const R& ring, const UniPoly<R>& f, const UniPoly<R>& g) {
  UniPoly<R> r;
  r.c.resize(std::max(f.c.size(), g.c.size()), ring.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
  for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = ring.sub(r.c[i], g.c[i]);
  return trim(ring, r);
}

template <class R>
UniPoly<R> scale(const R& ring, const UniPoly<R>& f, const typename R::Elem& s) {
  UniPoly<R> r = f;
  for (auto& v : r.c) v = ring.mul(v, s);
  return trim(ring, r);
}

template <class R>
UniPoly<R> mul(const R& ring, const UniPoly<R>& f, const UniPoly<R>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  UniPoly<R> r;
  r.c.assign(f.c.size() + g.c.size() - 1, ring.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (ring.is_zero(f.c[i])) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j)
      r.c[i + j] = ring.add(r.c[i + j], ring.mul(f.c[i], g.c[j]));
  }
  return trim(ring, r);
}

template <class R>
UniPoly<R> pow(const R& ring, UniPoly<R> base, unsigned e) {
  UniPoly<R> r = one(ring);
  while (e) {
    if (e & 1u) r = mul(ring, r, base);
    e >>= 1;
    if (e) base = mul(ring, base, base);
  }
  return r;
}

/// Multiplies by x^k.
template <class R>
UniPoly<R> shift(const R& ring, const UniPoly<R>& f, int k) {
  if (f.is_zero()) return {};
  UniPoly<R> r;
  r.c.assign(static_cast<std::size_t>(k), ring.zero());
  r.c.insert(r.c.end(), f.c.begin(), f.c.end());
  return r;
}

template <class R>
typename R::Elem eval(const R& ring, const UniPoly<R>& f, const typename R::Elem& x) {
  typename R::Elem acc = ring.zero();
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
  return acc;
}

template <class R>
UniPoly<R> derivative(const R& ring, const UniPoly<R>& f) {
  if (f.c.size() <= 1) return {};
  UniPoly<R> r;
  r.c.resize(f.c.size() - 1);
  for (std::size_t i = 1; i < f.c.size(); ++i)
    r.c[i - 1] = ring.mul(ring.from_int(BigInt(static_cast<unsigned long>(i))), f.c[i]);
  return trim(ring, r);
}

/// Quotient and remainder over a field. Throws DomainError on g == 0.
template <class R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const R& ring, const UniPoly<R>& f,
                                         const UniPoly<R>& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  UniPoly<R> rem = f;
  if (f.degree() < g.degree()) return {UniPoly<R>{}, rem};
  UniPoly<R> quo;
  quo.c.assign(static_cast<std::size_t>(f.degree() - g.degree() + 1), ring.zero());
  const auto lead_inv = ring.inv(g.lead());
  const int dg = g.degree();
  for (int d = rem.degree(); d >= dg; --d) {
    const auto& top = rem.c[static_cast<std::size_t>(d)];
    if (ring.is_zero(top)) continue;
    const auto q = ring.mul(top, lead_inv);
    quo.c[static_cast<std::size_t>(d - dg)] = q;
    for (int i = 0; i <= dg; ++i) {
      auto& slot = rem.c[static_cast<std::size_t>(d - dg + i)];
      slot = ring.sub(slot, ring.mul(q, g.c[static_cast<std::size_t>(i)]));
    }
  }
  trim(ring, rem);
  trim(ring, quo);
  return {quo, rem};
}

template <class R>
UniPoly<R> rem(const R& ring, const UniPoly<R>& f, const UniPoly<R>& g) {
  return divmod(ring, f, g).second;
}

/// f / g when g divides f, in any ring with exact coefficient division.
/// Throws DomainError if the division is not exact.
template <class R>
UniPoly<R> exact_div(const R& ring, const UniPoly<R>& f, const UniPoly<R>& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw DomainError("inexact polynomial division");
  UniPoly<R> r = f;
  UniPoly<R> quo;
  quo.c.assign(static_cast<std::size_t>(f.degree() - g.degree() + 1), ring.zero());
  const int dg = g.degree();
  for (int d = r.degree(); d >= dg; --d) {
    const auto& top = r.c[static_cast<std::size_t>(d)];
    if (ring.is_zero(top)) continue;
    const auto q = ring.exact_div(top, g.lead());
    quo.c[static_cast<std::size_t>(d - dg)] = q;
    for (int i = 0; i <= dg; ++i) {
      auto& slot = r.c[static_cast<std::size_t>(d - dg + i)];
      slot = ring.sub(slot, ring.mul(q, g.c[static_cast<std::size_t>(i)]));
    }
  }
  trim(ring, r);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return trim(ring, quo);
}

template <class R>
UniPoly<R> monic(const R& ring, const UniPoly<R>& f) {
  if (f.is_zero()) return f;
  return scale(ring, f, ring.inv(f.lead()));
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class R>
UniPoly<R> gcd(const R& ring, UniPoly<R> a, UniPoly<R> b) {
  while (!b.is_zero()) {
    UniPoly<R> r = rem(ring, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(ring, a);
}

/// Returns (g, s, t) with s f + t h = g = gcd(f, h), g monic.
template <class R>
struct ExtGcd {
  UniPoly<R> g, s, t;
};

template <class R>
ExtGcd<R> ext_gcd(const R& ring, const UniPoly<R>& f, const UniPoly<R>& h) {
  UniPoly<R> r0 = f, r1 = h;
  UniPoly<R> s0 = one(ring), s1{};
  UniPoly<R> t0{}, t1 = one(ring);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(ring, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(ring, s0, mul(ring, q, s1));
    auto t2 = sub(ring, t0, mul(ring, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto li = ring.inv(r0.lead());
  return {scale(ring, r0, li), scale(ring, s0, li), scale(ring, t0, li)};
}

/// Inverse of a modulo m over a field. Throws DomainError if not a unit.
template <class R>
UniPoly<R> inv_mod(const R& ring, const UniPoly<R>& a, const UniPoly<R>& m) {
  auto eg = ext_gcd(ring, rem(ring, a, m), m);
  if (eg.g.degree() != 0) throw DomainError("polynomial is not invertible modulo the given modulus");
  return rem(ring, eg.s, m);
}

template <class R>
UniPoly<R> mulmod(const R& ring, const UniPoly<R>& a, const UniPoly<R>& b, const UniPoly<R>& m) {
  return rem(ring, mul(ring, a, b), m);
}

/// base^e mod m over a field, e a nonnegative big integer.
template <class R>
UniPoly<R> powmod(const R& ring, const UniPoly<R>& base, const BigInt& e, const UniPoly<R>& m) {
  UniPoly<R> result = rem(ring, one(ring), m);
  UniPoly<R> b = rem(ring, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(ring, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(ring, result, b, m);
  }
  return result;
}

/// Coefficient-wise change of ring.
template <class R, class S, class Fn>
UniPoly<S> map_coeffs(const S& target, const UniPoly<R>& f, Fn&& fn) {
  UniPoly<S> r;
  r.c.reserve(f.c.size());
  for (const auto& v : f.c) r.c.push_back(fn(v));
  return trim(target, r);
}

template <class R>
std::string to_string(const R& ring, const UniPoly<R>& f, const std::string& var = "x") {
  if (f.is_zero()) return "0";
  std::string s;
  for (int d = f.degree(); d >= 0; --d) {
    const auto& v = f.c[static_cast<std::size_t>(d)];
    if (ring.is_zero(v)) continue;
    if (!s.empty()) s += " + ";
    const bool unit = ring.eq(v, ring.one());
    if (!unit || d == 0) s += ring.str(v);
    if (d > 0) {
      if (!unit) s += "*";
      s += var;
      if (d > 1) s += "^" + std::to_string(d);
    }
  }
  return s;
}

}  // namespace poly

/// Polynomials over R viewed as a ring with exact division; lets Bareiss
/// elimination run over Z[x] or F_p[x].
template <class R>
struct PolyRing {
  using Elem = UniPoly<R>;
  R base;

  Elem zero() const { return {}; }
  Elem one() const { return poly::one(base); }
  Elem from_int(const BigInt& v) const { return poly::constant(base, base.from_int(v)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return poly::add(base, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return poly::sub(base, a, b); }
  Elem neg(const Elem& a) const { return poly::neg(base, a); }
  Elem mul(const Elem& a, const Elem& b) const { return poly::mul(base, a, b); }
  Elem exact_div(const Elem& a, const Elem& b) const { return poly::exact_div(base, a, b); }
  std::string str(const Elem& a) const { return "(" + poly::to_string(base, a) + ")"; }
};

}  // namespace gql
