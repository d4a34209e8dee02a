#include "gql/transpositions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gql/error.hpp"

namespace gql {

namespace {

void require_transitive(const PermGroup& group, const char* what) {
  if (!group.is_transitive())
    throw DomainError(std::string(what) + " requires a transitive group");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

int Partition::degree() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

int Partition::block_of(int point) const {
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (std::find(blocks[k].begin(), blocks[k].end(), point) != blocks[k].end())
      return static_cast<int>(k);
  return -1;
}

bool Partition::is_valid(int n) const {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (int v : b) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

std::vector<PointPair> transpositions(const PermGroup& group) {
  const int n = group.degree();
  std::vector<PointPair> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (group.contains(Permutation::transposition(n, i, j))) out.emplace_back(i, j);
  return out;
}

int transposition_count_m(const PermGroup& group) {
  require_transitive(group, "transposition_count_m");
  const int n = group.degree();
  std::vector<int> per_point(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : transpositions(group)) {
    ++per_point[static_cast<std::size_t>(i)];
    ++per_point[static_cast<std::size_t>(j)];
  }
  const int m = per_point.front();
  for (int c : per_point)
    if (c != m)
      throw InvariantError("transposition count differs between points of a transitive group");
  return m;
}

Partition transposition_partition(const PermGroup& group) {
  require_transitive(group, "transposition_partition");
  const int n = group.degree();
  UnionFind uf(n);
  for (auto [i, j] : transpositions(group)) uf.unite(i, j);

  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_root[static_cast<std::size_t>(uf.find(v))].push_back(v);
  Partition part;
  for (auto& b : by_root)
    if (!b.empty()) part.blocks.push_back(std::move(b));

  const std::size_t size = part.blocks.front().size();
  for (const auto& b : part.blocks)
    if (b.size() != size)
      throw InvariantError("transposition classes of a transitive group have unequal sizes");
  if (n % static_cast<int>(size) != 0)
    throw InvariantError("class size does not divide the degree");
  return part;
}

PermGroup transposition_subgroup(const PermGroup& group) {
  require_transitive(group, "transposition_subgroup");
  const int n = group.degree();
  std::vector<Permutation> gens;
  for (auto [i, j] : transpositions(group)) gens.push_back(Permutation::transposition(n, i, j));
  if (gens.empty()) return PermGroup::trivial(n);
  return PermGroup::build(std::move(gens));
}

BlockAction quotient_on_blocks(const PermGroup& group, const Partition& partition) {
  const int n = group.degree();
  if (!partition.is_valid(n)) throw DomainError("partition does not cover the group's points");

  Partition sorted = partition;
  for (auto& b : sorted.blocks) std::sort(b.begin(), b.end());
  std::sort(sorted.blocks.begin(), sorted.blocks.end());

  std::vector<int> block_index(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < sorted.blocks.size(); ++k)
    for (int v : sorted.blocks[k]) block_index[static_cast<std::size_t>(v)] = static_cast<int>(k);

  const int blocks = static_cast<int>(sorted.blocks.size());
  std::vector<Permutation> images;
  for (const auto& g : group.generators()) {
    std::vector<int> img(static_cast<std::size_t>(blocks), -1);
    for (std::size_t k = 0; k < sorted.blocks.size(); ++k) {
      const auto& b = sorted.blocks[k];
      const int target = block_index[static_cast<std::size_t>(g(b.front()))];
      for (int v : b)
        if (block_index[static_cast<std::size_t>(g(v))] != target ||
            sorted.blocks[static_cast<std::size_t>(target)].size() != b.size())
          throw DomainError("generator " + g.to_string() + " does not permute the blocks");
      img[k] = target;
    }
    try {
      images.emplace_back(std::move(img));
    } catch (const DomainError&) {
      throw DomainError("generator " + g.to_string() + " does not permute the blocks");
    }
  }
  PermGroup quotient = images.empty() ? PermGroup::trivial(blocks) : PermGroup::build(images);
  return {std::move(quotient), std::move(images)};
}

bool cyclic_containment(const Permutation& sigma, const PermGroup& group) {
  if (sigma.degree() != group.degree()) throw DomainError("degree mismatch");
  Permutation power = sigma;
  for (std::uint64_t k = 1; k <= sigma.order(); ++k, power = power * sigma)
    if (!group.contains(power)) return false;
  return true;
}

}  // namespace gql
