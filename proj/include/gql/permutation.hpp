#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gql {

/// Largest degree accepted anywhere in the permutation layer.
inline constexpr int kMaxDegree = 16;

/// An element of S_n acting on points {0, ..., n-1}.
///
/// Points are 0-based internally; the textual cycle notation is 1-based.
/// Composition follows (p * q)(i) = p(q(i)): q is applied first.
class Permutation {
public:
  using Point = std::uint8_t;

  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(int degree);
  /// Validates that images is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int i, int j);
  /// Builds from 0-based cycles; points absent from every cycle are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  int image(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::vector<int> images() const { return {images_.begin(), images_.end()}; }

  bool is_identity() const noexcept;
  /// Smallest point not fixed, or -1 for the identity.
  int first_moved() const noexcept;
  Permutation inverse() const;
  /// Disjoint cycles of length >= 2, 0-based, each starting at its least point.
  std::vector<std::vector<int>> cycles() const;
  /// Sorted cycle lengths including fixed points.
  std::vector<int> cycle_type() const;
  std::uint64_t order() const;

  /// 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::size_t hash() const noexcept;

private:
  std::vector<Point> images_;
};

/// (p * q)(i) = p(q(i)). Throws DomainError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// p^-1 q^-1 p q
Permutation commutator(const Permutation& p, const Permutation& q);

/// g p g^-1
Permutation conjugate(const Permutation& p, const Permutation& g);

/// Parses 1-based disjoint cycle notation such as "(1 2 3)(4 5)" or "()".
/// Commas between points are accepted. Repeated points, points outside
/// 1..degree and degrees outside 1..16 are rejected with ParseError.
Permutation parse_permutation(std::string_view text, int degree);

/// Parses a generator list such as "(1 2 3 4),(1 3)". Only commas outside
/// parentheses separate generators; "(1 2)(3 4)" is a single element.
std::vector<Permutation> parse_generator_list(std::string_view text, int degree);

}  // namespace gql

template <>
struct std::hash<gql::Permutation> {
  std::size_t operator()(const gql::Permutation& p) const noexcept { return p.hash(); }
};
