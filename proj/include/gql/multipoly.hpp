#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gql/rings.hpp"
#include "gql/unipoly.hpp"

namespace gql {

using Exponent = std::array<int, 3>;
using IntMatrix3 = std::array<std::array<std::int64_t, 3>, 3>;

/// Sparse polynomial in x, y, z with integer coefficients. No stored zeros.
class MultiPoly {
public:
  using Terms = std::map<Exponent, BigInt>;

  MultiPoly() = default;
  explicit MultiPoly(Terms terms);

  static MultiPoly constant(const BigInt& c);
  /// Variable 0, 1 or 2 (x, y, z).
  static MultiPoly variable(int var);
  static MultiPoly monomial(const Exponent& e, const BigInt& c);
  /// a x + b y + c z
  static MultiPoly linear(std::int64_t a, std::int64_t b, std::int64_t c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coeff(const Exponent& e) const;
  int total_degree() const;
  /// Degree in one variable, -1 for zero.
  int degree_in(int var) const;
  /// Set when every term has the same total degree (zero has none).
  std::optional<int> homogeneous_degree() const;
  BigInt content() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const BigInt& s) const;
  MultiPoly pow(unsigned e) const;
  /// Exact division of every coefficient by s.
  MultiPoly divided(const BigInt& s) const;

  MultiPoly derivative(int var) const;
  /// P(M (x, y, z)^T): variable i is replaced by sum_j M[i][j] * var_j.
  MultiPoly substitute_linear(const IntMatrix3& m) const;

  BigInt evaluate(const std::array<BigInt, 3>& pt) const;

  /// Evaluation over any ring whose from_int accepts BigInt.
  template <class R>
  typename R::Elem evaluate(const R& ring, const std::array<typename R::Elem, 3>& pt) const {
    typename R::Elem acc = ring.zero();
    for (const auto& [e, c] : terms_) {
      typename R::Elem t = ring.from_int(c);
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k)
          t = ring.mul(t, pt[static_cast<std::size_t>(v)]);
      acc = ring.add(acc, t);
    }
    return acc;
  }

  /// Restriction to the line x = x0, y = y0 as a polynomial in z.
  template <class R>
  UniPoly<R> slice_z(const R& ring, const typename R::Elem& x0, const typename R::Elem& y0) const {
    std::vector<typename R::Elem> c(static_cast<std::size_t>(std::max(degree_in(2), 0)) + 1, ring.zero());
    for (const auto& [e, coeff] : terms_) {
      typename R::Elem t = ring.from_int(coeff);
      for (int k = 0; k < e[0]; ++k) t = ring.mul(t, x0);
      for (int k = 0; k < e[1]; ++k) t = ring.mul(t, y0);
      auto& slot = c[static_cast<std::size_t>(e[2])];
      slot = ring.add(slot, t);
    }
    return poly::make(ring, std::move(c));
  }

  /// P(x, 1, z) as a polynomial in z whose coefficients are polynomials in x.
  template <class R>
  UniPoly<PolyRing<R>> dehomogenize_y_in_z(const R& ring) const {
    PolyRing<R> pr{ring};
    std::vector<UniPoly<R>> c(static_cast<std::size_t>(std::max(degree_in(2), 0)) + 1);
    for (const auto& [e, coeff] : terms_) {
      auto& slot = c[static_cast<std::size_t>(e[2])];
      slot = poly::add(ring, slot, poly::monomial(ring, e[0], ring.from_int(coeff)));
    }
    return poly::make(pr, std::move(c));
  }

  /// P(s Q + t P0) as a binary form, returned as the polynomial in s at
  /// t = 1: coefficient i belongs to s^i t^(d-i). Requires homogeneity.
  template <class R>
  UniPoly<R> restrict_to_line(const R& ring, const std::array<typename R::Elem, 3>& base_point,
                              const std::array<typename R::Elem, 3>& direction) const {
    std::array<UniPoly<R>, 3> lin;
    for (std::size_t v = 0; v < 3; ++v)
      lin[v] = poly::make(ring, {base_point[v], direction[v]});
    UniPoly<R> acc;
    for (const auto& [e, coeff] : terms_) {
      UniPoly<R> t = poly::constant(ring, ring.from_int(coeff));
      for (std::size_t v = 0; v < 3; ++v)
        for (int k = 0; k < e[v]; ++k) t = poly::mul(ring, t, lin[v]);
      acc = poly::add(ring, acc, t);
    }
    return acc;
  }

  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
  void prune();
  Terms terms_;
};

/// det of the 3x3 matrix of second partials.
MultiPoly hessian(const MultiPoly& form);

/// Parses sums of terms like "x^4 + 3*y^2*z^2 - z^4" with integer
/// coefficients. Throws ParseError on malformed input.
MultiPoly parse_multipoly(const std::string& text);

std::int64_t det3(const IntMatrix3& m);
/// Inverse of a unimodular integer matrix. Throws DomainError otherwise.
IntMatrix3 inverse_unimodular(const IntMatrix3& m);
IntMatrix3 identity3();
IntMatrix3 multiply(const IntMatrix3& a, const IntMatrix3& b);

}  // namespace gql
