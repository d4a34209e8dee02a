#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "gql/unipoly.hpp"

namespace gql {

/// Irreducible factor with its multiplicity.
template <class F>
struct FactorPower {
  UniPoly<F> factor;
  int multiplicity;
};

namespace ff {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/// x^(q^k) mod f where q is the field order.
template <class F>
UniPoly<F> frobenius_power(const F& field, const UniPoly<F>& f, int k) {
  UniPoly<F> r = poly::rem(field, poly::x(field), f);
  const BigInt q = field.order();
  for (int i = 0; i < k; ++i) r = poly::powmod(field, r, q, f);
  return r;
}

/// Rabin's test over a finite field.
template <class F>
bool is_irreducible(const F& field, const UniPoly<F>& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto xpoly = poly::x(field);
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    auto h = poly::sub(field, frobenius_power(field, f, n / static_cast<int>(r)), xpoly);
    if (poly::gcd(field, f, h).degree() != 0) return false;
  }
  auto top = poly::sub(field, frobenius_power(field, f, n), xpoly);
  return poly::rem(field, top, f).is_zero();
}

/// f(x) with each coefficient replaced by its p-th root, collapsing exponents
/// by p. Requires every exponent with a nonzero coefficient divisible by p.
template <class F>
UniPoly<F> pth_root_poly(const F& field, const UniPoly<F>& f) {
  const auto p = static_cast<std::size_t>(field.characteristic());
  UniPoly<F> r;
  r.c.assign(f.c.size() / p + 1, field.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (field.is_zero(f.c[i])) continue;
    if (i % p != 0) throw InvariantError("p-th root of a polynomial that is not a p-th power");
    r.c[i / p] = field.pth_root(f.c[i]);
  }
  return poly::trim(field, r);
}

/// Square-free decomposition of a nonzero polynomial: monic pairwise coprime
/// square-free parts with multiplicities, so that f = lc * prod g_i^e_i.
template <class F>
std::vector<FactorPower<F>> squarefree_decomposition(const F& field, const UniPoly<F>& f_in) {
  if (f_in.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<FactorPower<F>> out;
  UniPoly<F> f = poly::monic(field, f_in);
  if (f.degree() == 0) return out;
  const auto p = static_cast<int>(field.characteristic());

  auto fp = poly::derivative(field, f);
  UniPoly<F> c = poly::gcd(field, f, fp);
  UniPoly<F> w = poly::exact_div(field, f, c);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly<F> y = poly::gcd(field, w, c);
    UniPoly<F> z = poly::exact_div(field, w, y);
    if (z.degree() > 0) out.push_back({z, i});
    ++i;
    w = y;
    c = poly::exact_div(field, c, y);
  }
  if (c.degree() > 0) {
    for (auto& fp2 : squarefree_decomposition(field, pth_root_poly(field, c)))
      out.push_back({fp2.factor, fp2.multiplicity * p});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

/// Product of the distinct monic irreducible factors of f.
template <class F>
UniPoly<F> squarefree_part(const F& field, const UniPoly<F>& f) {
  UniPoly<F> r = poly::one(field);
  for (const auto& fpow : squarefree_decomposition(field, f)) r = poly::mul(field, r, fpow.factor);
  return r;
}

/// Distinct-degree factorization of a monic square-free f: pairs (g_d, d)
/// where g_d is the product of all irreducible factors of degree d.
template <class F>
std::vector<std::pair<UniPoly<F>, int>> distinct_degree(const F& field, UniPoly<F> f) {
  std::vector<std::pair<UniPoly<F>, int>> out;
  const auto xpoly = poly::x(field);
  const BigInt q = field.order();
  UniPoly<F> h = poly::rem(field, xpoly, f);
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = poly::powmod(field, h, q, f);
    UniPoly<F> g = poly::gcd(field, f, poly::sub(field, h, xpoly));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = poly::exact_div(field, f, g);
      h = poly::rem(field, h, f);
    }
  }
  if (f.degree() > 0) out.emplace_back(poly::monic(field, f), f.degree());
  return out;
}

template <class F>
UniPoly<F> random_poly(const F& field, int degree_below, std::mt19937_64& rng) {
  UniPoly<F> r;
  r.c.resize(static_cast<std::size_t>(degree_below));
  for (auto& v : r.c) v = field.random(rng);
  return poly::trim(field, r);
}

/// Splits a monic square-free f whose irreducible factors all have degree d
/// (Cantor-Zassenhaus; trace map in characteristic 2).
template <class F>
std::vector<UniPoly<F>> equal_degree(const F& field, const UniPoly<F>& f, int d,
                                     std::mt19937_64& rng) {
  if (f.degree() == d) return {poly::monic(field, f)};
  const BigInt q = field.order();
  UniPoly<F> split;
  while (true) {
    UniPoly<F> a = random_poly(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    UniPoly<F> g = poly::gcd(field, a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split = g;
      break;
    }
    UniPoly<F> b;
    if (field.characteristic() == 2) {
      // Tr(a) = a + a^2 + ... + a^(2^(kd-1)) for q^d = 2^(kd).
      const int steps = field.extension_degree() * d;
      UniPoly<F> t = poly::rem(field, a, f);
      b = t;
      for (int i = 1; i < steps; ++i) {
        t = poly::mulmod(field, t, t, f);
        b = poly::add(field, b, t);
      }
    } else {
      BigInt e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = poly::sub(field, poly::powmod(field, a, e, f), poly::one(field));
    }
    g = poly::gcd(field, b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      split = g;
      break;
    }
  }
  auto left = equal_degree(field, split, d, rng);
  auto right = equal_degree(field, poly::exact_div(field, f, split), d, rng);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

template <class F>
bool coeff_less(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c.rbegin(), a.c.rend(), b.c.rbegin(), b.c.rend());
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients). Seeded, so the output is reproducible.
template <class F>
std::vector<FactorPower<F>> factor(const F& field, const UniPoly<F>& f, std::uint64_t seed = 0) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<FactorPower<F>> out;
  for (const auto& sq : squarefree_decomposition(field, f))
    for (const auto& [g, d] : distinct_degree(field, sq.factor))
      for (auto& irr : equal_degree(field, g, d, rng)) out.push_back({irr, sq.multiplicity});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (coeff_less(a.factor, b.factor)) return true;
    if (coeff_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

/// Sorted degrees of the irreducible factors, with multiplicity.
template <class F>
std::vector<int> degree_pattern(const F& field, const UniPoly<F>& f, std::uint64_t seed = 0) {
  std::vector<int> degs;
  for (const auto& fp : factor(field, f, seed))
    for (int k = 0; k < fp.multiplicity; ++k) degs.push_back(fp.factor.degree());
  std::sort(degs.begin(), degs.end());
  return degs;
}

template <class F>
struct Root {
  typename F::Elem value;
  int multiplicity;
};

/// Roots of f in the field with multiplicities, sorted by value.
template <class F>
std::vector<Root<F>> roots(const F& field, const UniPoly<F>& f, std::uint64_t seed = 0) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<Root<F>> out;
  for (const auto& sq : squarefree_decomposition(field, f)) {
    const auto xpoly = poly::x(field);
    auto h = poly::powmod(field, xpoly, field.order(), sq.factor);
    auto linear = poly::gcd(field, sq.factor, poly::sub(field, h, xpoly));
    if (linear.degree() < 1) continue;
    for (const auto& l : equal_degree(field, linear, 1, rng))
      out.push_back({field.neg(l.c[0]), sq.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

/// Monic irreducible of degree k over F_p from a seeded deterministic
/// search. Degree 1 returns x + c for the first c tried.
inline FpPoly find_irreducible(const PrimeField& field, int k, std::uint64_t seed = 0) {
  if (k < 1) throw DomainError("irreducible degree must be positive");
  std::mt19937_64 rng(seed);
  while (true) {
    FpPoly f;
    f.c.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) f.c[static_cast<std::size_t>(i)] = field.random(rng);
    f.c.back() = 1;
    if (is_irreducible(field, f)) return f;
  }
}

}  // namespace ff

/// F_{p^k} with a modulus from find_irreducible(p, k, seed).
inline ExtField make_extension(const PrimeField& base, int k, std::uint64_t seed = 0) {
  return ExtField(base, ff::find_irreducible(base, k, seed).c);
}

}  // namespace gql
