#pragma once

#include <vector>

#include "gql/unipoly.hpp"

namespace gql {

template <class R>
using Matrix = std::vector<std::vector<typename R::Elem>>;

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
/// an integral domain, so R only needs exact_div.
template <class R>
typename R::Elem det_bareiss(const R& ring, Matrix<R> m) {
  const std::size_t n = m.size();
  if (n == 0) return ring.one();
  bool negate = false;
  typename R::Elem prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring.is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && ring.is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return ring.zero();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
        m[i][j] = ring.exact_div(num, prev);
      }
      m[i][k] = ring.zero();
    }
    prev = m[k][k];
  }
  auto d = m[n - 1][n - 1];
  return negate ? ring.neg(d) : d;
}

/// Sylvester matrix with a's n = deg b rows first, then b's m = deg a rows;
/// columns run from the highest power down to x^0.
template <class R>
Matrix<R> sylvester_matrix(const R& ring, const UniPoly<R>& a, const UniPoly<R>& b) {
  const int m = a.degree(), n = b.degree();
  const auto size = static_cast<std::size_t>(m + n);
  Matrix<R> s(size, std::vector<typename R::Elem>(size, ring.zero()));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = a.c[static_cast<std::size_t>(i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = b.c[static_cast<std::size_t>(i)];
  return s;
}

/// Res(f, g) = lc(g)^deg f * prod f(beta) over the roots beta of g, which is
/// the Sylvester determinant with g's coefficient rows placed first (it
/// differs from the f-first determinant by (-1)^(deg f * deg g)). Thus
/// Res(x - a, x - b) = b - a. Throws DomainError on a zero argument.
template <class R>
typename R::Elem resultant(const R& ring, const UniPoly<R>& f, const UniPoly<R>& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  return det_bareiss(ring, sylvester_matrix(ring, g, f));
}

/// Coefficients (ascending) of the j-th subresultant of a and b, computed
/// from determinants of the Sylvester submatrices with a's rows first.
template <class R>
std::vector<typename R::Elem> subresultant(const R& ring, const UniPoly<R>& a, const UniPoly<R>& b,
                                           int j) {
  const int m = a.degree(), n = b.degree();
  if (a.is_zero() || b.is_zero() || j < 0 || j > std::min(m, n))
    throw DomainError("invalid subresultant index");
  const int rows = (n - j) + (m - j);
  const int cols = m + n - j;
  Matrix<R> full(static_cast<std::size_t>(rows),
                 std::vector<typename R::Elem>(static_cast<std::size_t>(cols), ring.zero()));
  // Column c holds the coefficient of x^(cols - 1 - c).
  for (int r = 0; r < n - j; ++r)
    for (int i = 0; i <= m; ++i) {
      const int power = (n - j - 1 - r) + i;
      full[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1 - power)] =
          a.c[static_cast<std::size_t>(i)];
    }
  for (int r = 0; r < m - j; ++r)
    for (int i = 0; i <= n; ++i) {
      const int power = (m - j - 1 - r) + i;
      full[static_cast<std::size_t>(n - j + r)][static_cast<std::size_t>(cols - 1 - power)] =
          b.c[static_cast<std::size_t>(i)];
    }
  std::vector<typename R::Elem> out;
  const int lead_cols = rows - 1;
  for (int i = 0; i <= j; ++i) {
    Matrix<R> sub(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
      auto& row = sub[static_cast<std::size_t>(r)];
      row.assign(full[static_cast<std::size_t>(r)].begin(),
                 full[static_cast<std::size_t>(r)].begin() + lead_cols);
      row.push_back(full[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols - 1 - i)]);
    }
    out.push_back(det_bareiss(ring, std::move(sub)));
  }
  return out;
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f) over a ring with exact
/// division.
template <class R>
typename R::Elem discriminant(const R& ring, const UniPoly<R>& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("discriminant needs positive degree");
  if (n == 1) return ring.one();
  const auto d = poly::derivative(ring, f);
  // Res(f, f') with the standard f-first sign.
  auto r = det_bareiss(ring, sylvester_matrix(ring, f, d));
  r = ring.exact_div(r, f.lead());
  return ((n * (n - 1) / 2) % 2) ? ring.neg(r) : r;
}

}  // namespace gql
