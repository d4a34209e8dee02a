#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gql/permutation.hpp"

namespace gql {

/// A subgroup of S_n given by generators, with a base and strong generating
/// set computed once at construction by deterministic Schreier-Sims.
///
/// Base points are the least points moved by the first generator (or
/// Schreier residue) that fixes every earlier base point.
class PermGroup {
public:
  /// One level of the stabilizer chain.
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<int> orbit;               // orbit of base_point, in discovery order
    std::vector<Permutation> transversal; // transversal[b](base_point) == b, for b in orbit
    std::vector<bool> in_orbit;
  };

  /// Result of sifting an element through the chain.
  struct SiftResult {
    Permutation residue;
    std::size_t level;  // == depth() when every level was passed
  };

  /// Throws DomainError on an empty list or mixed degrees.
  static PermGroup build(std::vector<Permutation> generators);
  static PermGroup trivial(int degree);
  /// Full symmetric group on n points.
  static PermGroup symmetric(int degree);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  std::vector<int> base() const;
  std::vector<Permutation> strong_generators() const;
  const std::vector<Level>& chain() const noexcept { return levels_; }
  std::size_t depth() const noexcept { return levels_.size(); }

  SiftResult sift(const Permutation& p, std::size_t from_level = 0) const;
  /// Throws DomainError on degree mismatch.
  bool contains(const Permutation& p) const;

  /// Orbit of a point under the generators, sorted ascending.
  std::vector<int> orbit(int point) const;
  bool is_transitive() const;

  /// Uniformly random element drawn as a product of transversal entries.
  Permutation random_element(std::mt19937_64& rng) const;

private:
  PermGroup(int degree, std::vector<Permutation> generators);
  void schreier_sims();
  void rebuild_level(std::size_t i);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Every generator of sub lies in group.
bool is_subgroup(const PermGroup& sub, const PermGroup& group);

/// Smallest subgroup of group containing gens and closed under conjugation
/// by group's generators.
PermGroup normal_closure(const PermGroup& group, std::vector<Permutation> gens);

/// [G, G], as the normal closure of the commutators of generator pairs.
PermGroup derived_subgroup(const PermGroup& group);

/// Orders of G, G', G'', ... down to the point where the series stabilizes.
std::vector<std::uint64_t> derived_series_orders(const PermGroup& group);

bool is_solvable(const PermGroup& group);

/// g h g^-1 in H for every generator pair. Throws DomainError when H is not
/// a subgroup of G.
bool is_normal(const PermGroup& group, const PermGroup& sub);

}  // namespace gql
