#pragma once
// Brute-force reference computations shared by the unit and acceptance
// tests. Nothing here touches the stabilizer-chain code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "gql/permutation.hpp"

namespace gql::oracle {

/// All elements of <gens> by breadth-first closure under right
/// multiplication by generators.
inline std::unordered_set<Permutation> closure(const std::vector<Permutation>& gens, int degree) {
  std::unordered_set<Permutation> seen{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Permutation h = e * g;
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<Permutation> as_vector(const std::unordered_set<Permutation>& s) {
  std::vector<Permutation> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

/// Derived subgroup of an explicitly enumerated group: closure of all
/// commutators of all element pairs.
inline std::unordered_set<Permutation> derived(const std::unordered_set<Permutation>& group,
                                               int degree) {
  std::set<Permutation> comms;
  for (const auto& a : group)
    for (const auto& b : group) comms.insert(a.inverse() * b.inverse() * a * b);
  return closure({comms.begin(), comms.end()}, degree);
}

inline bool solvable(const std::unordered_set<Permutation>& group, int degree) {
  auto current = group;
  while (current.size() > 1) {
    auto next = derived(current, degree);
    if (next.size() == current.size()) return false;
    current = std::move(next);
  }
  return true;
}

inline Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) img[static_cast<std::size_t>(i)] = i;
  for (int i = degree - 1; i > 0; --i)
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(rng() % (i + 1))]);
  return Permutation(img);
}

/// Product of `length` generators (or their inverses) chosen at random.
inline Permutation random_word(const std::vector<Permutation>& gens, int length,
                               std::mt19937_64& rng) {
  Permutation w = Permutation::identity(gens.front().degree());
  for (int k = 0; k < length; ++k) {
    const auto& g = gens[rng() % gens.size()];
    w = w * ((rng() & 1) ? g : g.inverse());
  }
  return w;
}

/// Derived subgroup by enumeration, as <[a, g] : a in G, g a generator>.
/// That subgroup is normal (x^-1 x^h telescopes over a word for h), and
/// modulo it every generator is central, so it is exactly [G, G]. Returns a
/// small generating set, grown greedily against the enumerated closure.
inline std::vector<Permutation> derived_generators(const std::vector<Permutation>& gens, int degree) {
  const auto elems = closure(gens, degree);
  std::vector<Permutation> out;
  auto current = closure({Permutation::identity(degree)}, degree);
  for (const auto& a : elems)
    for (const auto& g : gens) {
      const auto c = a.inverse() * g.inverse() * a * g;
      if (current.count(c)) continue;
      out.push_back(c);
      current = closure(out, degree);
    }
  return out;
}

/// Solvability by iterating derived_generators until the group is trivial
/// or stops shrinking.
inline bool solvable_by_enumeration(std::vector<Permutation> gens, int degree) {
  std::size_t order = closure(gens, degree).size();
  while (order > 1) {
    gens = derived_generators(gens, degree);
    const std::size_t next = gens.empty() ? 1 : closure(gens, degree).size();
    if (next == order) return false;
    order = next;
  }
  return true;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace gql::oracle
