#include "gql/integer_poly.hpp"

#include <algorithm>
#include <set>

#include "gql/resultant.hpp"

namespace gql {

BigInt content(const ZPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return f;
  BigInt g = content(f);
  if (f.lead() < 0) g = -g;
  ZPoly r = f;
  for (auto& c : r.c) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

QPoly to_rational(const ZPoly& f) {
  return poly::map_coeffs(RationalField{}, f, [](const BigInt& v) { return BigRational(v); });
}

ZPoly clear_denominators(const QPoly& f) {
  BigInt l = 1;
  for (const auto& c : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly r;
  for (const auto& c : f.c) r.c.push_back(BigInt(c * l));
  poly::trim(IntegerRing{}, r);
  return primitive_part(r);
}

FpPoly reduce(const PrimeField& field, const ZPoly& f) {
  return poly::map_coeffs(field, f, [&](const BigInt& v) { return field.from_int(v); });
}

ZPoly squarefree_part_over_Q(const ZPoly& f) {
  if (f.is_zero()) throw DomainError("square-free part of the zero polynomial");
  const RationalField q;
  const QPoly fq = to_rational(f);
  const QPoly g = poly::gcd(q, fq, poly::derivative(q, fq));
  return clear_denominators(poly::divmod(q, fq, g).first);
}

bool is_squarefree_over_Q(const ZPoly& f) {
  const RationalField q;
  const QPoly fq = to_rational(f);
  return poly::gcd(q, fq, poly::derivative(q, fq)).degree() == 0;
}

BigInt discriminant(const ZPoly& f) { return discriminant(IntegerRing{}, f); }

bool is_good_reduction(const ZPoly& f, const PrimeField& field) {
  if (f.degree() < 1) return false;
  const FpPoly fp = reduce(field, f);
  if (fp.degree() != f.degree()) return false;
  return poly::gcd(field, fp, poly::derivative(field, fp)).degree() == 0;
}

IrreducibilityVerdict certify_irreducible_over_Q(const ZPoly& f,
                                                 const std::vector<std::uint64_t>& primes,
                                                 std::uint64_t seed) {
  if (f.degree() < 1) throw DomainError("irreducibility certificate needs positive degree");
  if (!is_squarefree_over_Q(f)) throw DomainError("polynomial is not square-free over Q");
  const ZPoly g = primitive_part(f);
  IrreducibilityVerdict v;
  for (auto p : primes) {
    const PrimeField field(p);
    PrimePattern pat{p, {}, false};
    if (!is_good_reduction(g, field)) {
      pat.skipped = true;
      v.patterns.push_back(std::move(pat));
      continue;
    }
    pat.degrees = ff::degree_pattern(field, reduce(field, g), seed);
    const bool single = pat.degrees.size() == 1;
    v.patterns.push_back(std::move(pat));
    if (single && !v.irreducible) {
      v.irreducible = true;
      v.witness = p;
    }
  }
  return v;
}

std::vector<std::string> coeff_strings(const ZPoly& f) {
  std::vector<std::string> out;
  for (const auto& c : f.c) out.push_back(c.get_str());
  return out;
}

ZPoly zpoly_from_strings(const std::vector<std::string>& coeffs) {
  ZPoly f;
  for (const auto& s : coeffs) {
    BigRational r = parse_rational(s);
    if (r.get_den() != 1) throw ParseError("expected an integer coefficient, got \"" + s + "\"");
    f.c.push_back(r.get_num());
  }
  return poly::trim(IntegerRing{}, f);
}

namespace {

std::vector<BigInt> divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

}  // namespace

std::vector<BigRational> rational_roots(const ZPoly& f_in) {
  std::set<BigRational> roots;
  ZPoly f = f_in;
  // Strip factors of x.
  std::size_t shift = 0;
  while (shift < f.c.size() && f.c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.insert(BigRational(0));
    f.c.erase(f.c.begin(), f.c.begin() + static_cast<std::ptrdiff_t>(shift));
  }
  if (f.degree() < 1) return {roots.begin(), roots.end()};
  const RationalField q;
  const QPoly fq = to_rational(f);
  for (const auto& num : divisors(f.c.front()))
    for (const auto& den : divisors(f.lead()))
      for (int sign : {1, -1}) {
        BigRational r(num * sign, den);
        r.canonicalize();
        if (poly::eval(q, fq, r) == 0) roots.insert(r);
      }
  return {roots.begin(), roots.end()};
}

}  // namespace gql
