#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gql/perm_group.hpp"

namespace gql {

/// Disjoint blocks covering {0, ..., n-1}; each block sorted, blocks ordered
/// by their least element.
struct Partition {
  std::vector<std::vector<int>> blocks;

  int degree() const;
  /// Index of the block containing point, -1 if absent.
  int block_of(int point) const;
  /// Blocks are disjoint, nonempty and cover 0..n-1.
  bool is_valid(int degree) const;
};

using PointPair = std::pair<int, int>;

/// Every {i, j} with (i j) in G, i < j, sorted lexicographically.
std::vector<PointPair> transpositions(const PermGroup& group);

/// Number of transpositions of G moving point 0. Requires a transitive G.
/// The count is checked to be the same for every point; a mismatch raises
/// InvariantError.
int transposition_count_m(const PermGroup& group);

/// Classes of i ~ j <=> i == j or (i j) in G. Requires a transitive G; the
/// blocks all have size m + 1 and (m + 1) divides n, otherwise
/// InvariantError.
Partition transposition_partition(const PermGroup& group);

/// H = <all transpositions of G>. Requires a transitive G.
PermGroup transposition_subgroup(const PermGroup& group);

struct BlockAction {
  PermGroup quotient;
  std::vector<Permutation> generator_images;  // one per generator of G
};

/// The action of G on the blocks of P (indexed by ascending least element).
/// Throws DomainError when a generator does not permute the blocks.
BlockAction quotient_on_blocks(const PermGroup& group, const Partition& partition);

/// Every power of sigma lies in G, which holds exactly when sigma does.
bool cyclic_containment(const Permutation& sigma, const PermGroup& group);

}  // namespace gql
