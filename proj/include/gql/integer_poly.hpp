#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gql/finite_factor.hpp"
#include "gql/unipoly.hpp"

namespace gql {

BigInt content(const ZPoly& f);
/// f / content(f) with positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);
QPoly to_rational(const ZPoly& f);
/// Scales by the lcm of denominators and takes the primitive part.
ZPoly clear_denominators(const QPoly& f);
FpPoly reduce(const PrimeField& field, const ZPoly& f);

/// Primitive square-free part over Q (product of distinct irreducible
/// factors, up to a rational unit).
ZPoly squarefree_part_over_Q(const ZPoly& f);
bool is_squarefree_over_Q(const ZPoly& f);

/// Pseudo-division free exact integer discriminant.
BigInt discriminant(const ZPoly& f);

/// p does not divide lc(f) and f mod p is square-free, i.e. p does not
/// divide lc(f) * disc(f).
bool is_good_reduction(const ZPoly& f, const PrimeField& field);

struct PrimePattern {
  std::uint64_t prime;
  std::vector<int> degrees;  // empty when the prime was skipped
  bool skipped = false;      // p | lc(f) * disc(f)
};

/// Outcome of the one-sided mod-p irreducibility certificate.
struct IrreducibilityVerdict {
  bool irreducible = false;     // a witness prime was found
  std::uint64_t witness = 0;    // valid when irreducible
  std::vector<PrimePattern> patterns;
};

/// Irreducible(p) when f mod p is irreducible of full degree for a listed
/// prime with p not dividing lc(f) * disc(f); otherwise inconclusive with
/// the observed patterns. Never claims reducibility. Throws DomainError when
/// f is zero, constant, or not square-free over Q.
IrreducibilityVerdict certify_irreducible_over_Q(const ZPoly& f,
                                                 const std::vector<std::uint64_t>& primes,
                                                 std::uint64_t seed = 0);

/// Coefficients as decimal strings, ascending.
std::vector<std::string> coeff_strings(const ZPoly& f);
ZPoly zpoly_from_strings(const std::vector<std::string>& coeffs);

/// Rational roots by the candidate divisors of the end coefficients. Only
/// for test oracles and small inputs.
std::vector<BigRational> rational_roots(const ZPoly& f);

}  // namespace gql
