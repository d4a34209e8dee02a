#include <doctest.h>

#include <random>

#include "gql/finite_factor.hpp"
#include "gql/integer_poly.hpp"
#include "gql/resultant.hpp"

using namespace gql;

namespace {

const IntegerRing ZZ;
const RationalField QQ;

ZPoly zp(std::vector<long> c) {
  ZPoly f;
  for (long v : c) f.c.emplace_back(v);
  return poly::trim(ZZ, f);
}

QPoly qp(std::vector<long> c) { return to_rational(zp(std::move(c))); }

FpPoly fp(const PrimeField& f, std::vector<long> c) {
  FpPoly r;
  for (long v : c) r.c.push_back(f.from_i64(v));
  return poly::trim(f, r);
}

ZPoly random_zpoly(std::mt19937_64& rng, int degree, int bound) {
  ZPoly f;
  for (int i = 0; i <= degree; ++i)
    f.c.emplace_back(static_cast<long>(rng() % (2 * bound + 1)) - bound);
  if (f.c.back() == 0) f.c.back() = 1;
  return f;
}

template <class F>
UniPoly<F> expand(const F& field, const std::vector<FactorPower<F>>& factors) {
  UniPoly<F> r = poly::one(field);
  for (const auto& fpow : factors) r = poly::mul(field, r, poly::pow(field, fpow.factor, static_cast<unsigned>(fpow.multiplicity)));
  return r;
}

// Independent irreducibility check: no common factor with x^(p^j) - x for
// j <= deg/2, computed by repeated p-th powering.
bool irreducible_by_gcd(const PrimeField& field, const FpPoly& f) {
  const auto xpoly = poly::x(field);
  FpPoly h = xpoly;
  for (int j = 1; 2 * j <= f.degree(); ++j) {
    h = poly::powmod(field, h, field.order(), f);
    if (poly::gcd(field, f, poly::sub(field, h, xpoly)).degree() > 0) return false;
  }
  return f.degree() >= 1;
}

}  // namespace

TEST_CASE("BigRational canonical form") {
  CHECK(parse_rational("6/4") == BigRational(3, 2));
  CHECK(parse_rational("-6/4").get_str() == "-3/2");
  CHECK(parse_rational("0/7").get_str() == "0");
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK(parse_rational("12") == BigRational(12));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("univariate arithmetic") {
  CHECK(poly::gcd(QQ, qp({-1, 0, 1}), qp({-1, 1})) == qp({-1, 1}));
  auto [q, r] = poly::divmod(QQ, qp({0, 0, 0, 1}), qp({0, 0, 1}));
  CHECK(q == qp({0, 1}));
  CHECK(r.is_zero());
  CHECK(poly::mul(ZZ, zp({1, 1}), zp({-1, 1})) == zp({-1, 0, 1}));
  CHECK_THROWS_AS(poly::divmod(QQ, qp({1, 1}), QPoly{}), DomainError);
  CHECK(poly::gcd(QQ, qp({2, 2}), qp({4, 4})) == qp({1, 1}));
}

TEST_CASE("ring axioms and Bezout on random inputs") {
  std::mt19937_64 rng(5);
  const PrimeField f(101);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = fp(f, {static_cast<long>(rng() % 101), static_cast<long>(rng() % 101), 1});
    auto b = fp(f, {static_cast<long>(rng() % 101), 1, static_cast<long>(rng() % 101), 3});
    auto c = fp(f, {static_cast<long>(rng() % 101), static_cast<long>(rng() % 101)});
    CHECK(poly::mul(f, poly::mul(f, a, b), c) == poly::mul(f, a, poly::mul(f, b, c)));
    CHECK(poly::mul(f, a, poly::add(f, b, c)) ==
          poly::add(f, poly::mul(f, a, b), poly::mul(f, a, c)));
    auto ab = poly::mul(f, a, c);
    auto bc = poly::mul(f, b, c);
    auto eg = poly::ext_gcd(f, ab, bc);
    CHECK(poly::rem(f, ab, eg.g).is_zero());
    CHECK(poly::rem(f, bc, eg.g).is_zero());
    CHECK(poly::add(f, poly::mul(f, eg.s, ab), poly::mul(f, eg.t, bc)) == eg.g);
    CHECK(poly::rem(f, eg.g, poly::monic(f, c)).is_zero());
  }
}

TEST_CASE("resultant") {
  // lc(g)^deg f * prod f(beta): Res(x - 3, x - 5) = 5 - 3.
  CHECK(resultant(ZZ, zp({-3, 1}), zp({-5, 1})) == 2);
  CHECK(resultant(ZZ, zp({-1, 0, 1}), zp({-1, 1})) == 0);
  CHECK(resultant(ZZ, zp({1, 0, 1}), zp({-2, 0, 1})) == 9);
  CHECK(resultant(ZZ, zp({7}), zp({1, 2, 3})) == 49);
  CHECK_THROWS_AS(resultant(ZZ, ZPoly{}, zp({1, 1})), DomainError);
}

TEST_CASE("resultant symmetry and vanishing on random inputs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 5);
    auto f = random_zpoly(rng, m, 9);
    auto g = random_zpoly(rng, n, 9);
    BigInt sign = ((m * n) % 2) ? -1 : 1;
    CHECK(resultant(ZZ, f, g) == sign * resultant(ZZ, g, f));
    // Rational route: lc(g)^m * prod over g's roots, via the norm of f mod g.
    auto common = random_zpoly(rng, 1, 5);
    auto fc = poly::mul(ZZ, f, common), gc = poly::mul(ZZ, g, common);
    CHECK(resultant(ZZ, fc, gc) == 0);
    CHECK((resultant(ZZ, f, g) == 0) ==
          (poly::gcd(QQ, to_rational(f), to_rational(g)).degree() > 0));
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(zp({1, 0, 1})) == -4);
  CHECK(discriminant(zp({-2, 0, 1})) == 8);
  CHECK(discriminant(zp({1, -2, 1})) == 0);
  // x^3 + a x + b: -4 a^3 - 27 b^2
  CHECK(discriminant(zp({2, -1, 0, 1})) == -4 * -1 - 27 * 4);
}

TEST_CASE("squarefree_part") {
  const PrimeField f(7);
  // (x-1)^2 (x+1)
  CHECK(ff::squarefree_part(f, fp(f, {1, -1, -1, 1})) == fp(f, {-1, 0, 1}));
  CHECK(ff::squarefree_part(f, fp(f, {3, 0, 2})) == poly::monic(f, fp(f, {3, 0, 2})));
  // x^7 - 3 = (x - 3)^7 over F_7 since 3^7 = 3.
  auto dec = ff::squarefree_decomposition(f, fp(f, {-3, 0, 0, 0, 0, 0, 0, 1}));
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].factor == fp(f, {-3, 1}));
  CHECK(dec[0].multiplicity == 7);
  // Over Q
  CHECK(squarefree_part_over_Q(zp({1, -1, -1, 1})) == zp({-1, 0, 1}));
  CHECK_THROWS_AS(ff::squarefree_decomposition(f, FpPoly{}), DomainError);
}

TEST_CASE("factor_mod_p") {
  const PrimeField f5(5), f3(3);
  auto fac = ff::factor(f5, fp(f5, {1, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].factor == fp(f5, {2, 1}));
  CHECK(fac[1].factor == fp(f5, {3, 1}));
  CHECK(ff::factor(f3, fp(f3, {1, 0, 1})).size() == 1);
  auto cubic = ff::factor(f5, fp(f5, {0, -1, 0, 1}));
  REQUIRE(cubic.size() == 3);
  CHECK(cubic[0].factor == fp(f5, {0, 1}));
  CHECK(cubic[1].factor == fp(f5, {1, 1}));
  CHECK(cubic[2].factor == fp(f5, {4, 1}));
  CHECK_THROWS_AS(PrimeField(9), DomainError);
}

TEST_CASE("factorization reproduces its input with irreducible factors") {
  std::mt19937_64 rng(13);
  for (std::uint64_t p : {3ull, 5ull, 7ull, 101ull, 1000003ull, 2ull}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 12; ++trial) {
      FpPoly g = poly::one(f);
      const int parts = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < parts; ++k) {
        auto h = ff::random_poly(f, 2 + static_cast<int>(rng() % 4), rng);
        if (h.degree() < 1) continue;
        g = poly::mul(f, g, poly::pow(f, h, 1 + static_cast<unsigned>(rng() % 3)));
      }
      if (g.degree() < 1) continue;
      auto fac = ff::factor(f, g, trial);
      CHECK(expand(f, fac) == poly::monic(f, g));
      for (const auto& fpow : fac) CHECK(irreducible_by_gcd(f, fpow.factor));
    }
  }
}

TEST_CASE("degree_pattern") {
  const PrimeField f5(5), f3(3);
  CHECK(ff::degree_pattern(f5, fp(f5, {1, 0, 1})) == std::vector<int>{1, 1});
  CHECK(ff::degree_pattern(f3, fp(f3, {1, 0, 1})) == std::vector<int>{2});
  CHECK(ff::degree_pattern(f5, fp(f5, {1, 0, 0, 0, 1})) == std::vector<int>{2, 2});
  auto fac = ff::factor(f5, fp(f5, {1, 0, 0, 0, 1}));
  CHECK(fac[0].factor == fp(f5, {2, 0, 1}));
  CHECK(fac[1].factor == fp(f5, {3, 0, 1}));
}

TEST_CASE("certify_irreducible_over_Q") {
  auto v = certify_irreducible_over_Q(zp({1, 0, 1}), {3});
  CHECK(v.irreducible);
  CHECK(v.witness == 3);

  auto split = certify_irreducible_over_Q(zp({-1, 0, 1}), {3, 5, 7});
  CHECK_FALSE(split.irreducible);
  for (const auto& pat : split.patterns) CHECK(pat.degrees == std::vector<int>{1, 1});

  // x^4 + 1 is irreducible over Q yet splits modulo every prime.
  auto quartic = certify_irreducible_over_Q(zp({1, 0, 0, 0, 1}), {3, 5, 7, 11, 13, 17, 19, 23});
  CHECK_FALSE(quartic.irreducible);
  for (const auto& pat : quartic.patterns) {
    CHECK_FALSE(pat.skipped);
    CHECK(pat.degrees.size() >= 2);
  }
  // p = 2 divides the discriminant and is skipped.
  auto skipped = certify_irreducible_over_Q(zp({1, 0, 0, 0, 1}), {2});
  CHECK(skipped.patterns[0].skipped);

  CHECK_THROWS_AS(certify_irreducible_over_Q(zp({1, -2, 1}), {3}), DomainError);
}

TEST_CASE("certificate never fires on polynomials with a rational root") {
  std::mt19937_64 rng(21);
  const std::vector<std::uint64_t> primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (int trial = 0; trial < 60; ++trial) {
    auto f = poly::mul(ZZ, random_zpoly(rng, 1, 6), random_zpoly(rng, 1 + static_cast<int>(rng() % 4), 6));
    if (!is_squarefree_over_Q(f) || f.degree() < 2) continue;
    REQUIRE_FALSE(rational_roots(f).empty());
    CHECK_FALSE(certify_irreducible_over_Q(f, primes).irreducible);
  }
}

TEST_CASE("roots_in_extension") {
  const PrimeField f3(3);
  const ExtField f9 = make_extension(f3, 2);
  FqPoly g = poly::map_coeffs(f9, fp(f3, {1, 0, 1}), [&](std::uint64_t v) { return f9.embed(v); });
  auto rs = ff::roots(f9, g);
  REQUIRE(rs.size() == 2);
  for (const auto& r : rs) {
    CHECK(r.multiplicity == 1);
    CHECK(f9.is_zero(poly::eval(f9, g, r.value)));
  }
  CHECK(ff::roots(f3, fp(f3, {1, 0, 1})).empty());

  const PrimeField f7(7);
  auto cube = poly::pow(f7, fp(f7, {-2, 1}), 3);
  auto rc = ff::roots(f7, cube);
  REQUIRE(rc.size() == 1);
  CHECK(rc[0].value == 2);
  CHECK(rc[0].multiplicity == 3);
  CHECK_THROWS_AS(ff::roots(f7, FpPoly{}), DomainError);
}

TEST_CASE("find_irreducible") {
  const PrimeField f3(3), f5(5);
  auto lin = ff::find_irreducible(f3, 1, 0);
  CHECK(lin.degree() == 1);
  CHECK(lin.lead() == 1);

  auto quad = ff::find_irreducible(f3, 2, 0);
  // Exhaustive scan: the monic quadratics over F_3 without a root in F_3.
  std::vector<FpPoly> irreducible;
  for (std::uint64_t a = 0; a < 3; ++a)
    for (std::uint64_t b = 0; b < 3; ++b) {
      FpPoly cand({b, a, 1});
      bool root = false;
      for (std::uint64_t t = 0; t < 3; ++t) root = root || poly::eval(f3, cand, t) == 0;
      if (!root) irreducible.push_back(cand);
    }
  CHECK(irreducible.size() == 3);
  CHECK(std::find(irreducible.begin(), irreducible.end(), quad) != irreducible.end());
  CHECK(ff::degree_pattern(f3, quad) == std::vector<int>{2});
  CHECK(ff::find_irreducible(f3, 2, 0) == quad);

  auto quartic = ff::find_irreducible(f5, 4, 0);
  CHECK(quartic.degree() == 4);
  CHECK(irreducible_by_gcd(f5, quartic));
  CHECK(ff::degree_pattern(f5, quartic) == std::vector<int>{4});
}

TEST_CASE("extension field arithmetic") {
  const PrimeField f7(7);
  const ExtField f = make_extension(f7, 3, 4);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    auto a = f.random(rng), b = f.random(rng);
    if (f.is_zero(a)) continue;
    CHECK(f.eq(f.mul(f.div(b, a), a), b));
    CHECK(f.eq(f.pow(a, f.order() - 1), f.one()));
    CHECK(f.eq(f.pow(f.pth_root(a), 7), a));
  }
  CHECK_THROWS_AS(ExtField(f7, {1, 0, 1, 0, 1}), DomainError);  // (x^2+x+1)(x^2-x+1)... reducible
}

TEST_CASE("subresultant gives the common root") {
  // a = (z - 2)(z - 3), b = (z - 2)(z + 5): gcd z - 2, S_1 proportional to it.
  auto a = zp({6, -5, 1}), b = zp({-10, 3, 1});
  auto s = subresultant(ZZ, a, b, 1);
  REQUIRE(s.size() == 2);
  CHECK(s[1] != 0);
  CHECK(s[0] == -2 * s[1]);
  CHECK(subresultant(ZZ, a, b, 0)[0] == resultant(ZZ, b, a));
}
