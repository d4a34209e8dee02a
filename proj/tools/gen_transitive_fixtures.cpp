// Generates data/transitive_groups.json: one representative per conjugacy
// class of transitive subgroups of S_n, 1 <= n <= 8.
//
// Classes are found by upward closure: from a class representative K, every
// overgroup <K, s> with s running over double coset representatives K s K is
// formed, kept if new up to conjugacy, and expanded in turn. For n <= 7 the
// closure starts from the trivial group and walks all subgroup classes. For
// n = 8 it starts from the transitive subgroups of a Sylow 2-subgroup of S_8,
// which every transitive group of degree 8 contains up to conjugacy.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

#include "gql/perm_group.hpp"

using namespace gql;

namespace {

using Key = std::uint32_t;  // images packed 4 bits per point

Key pack(const Permutation& p) {
  Key k = 0;
  for (int i = 0; i < p.degree(); ++i) k |= static_cast<Key>(p.image(i)) << (4 * i);
  return k;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> elements(const PermGroup& g) {
  std::vector<Permutation> out{Permutation::identity(g.degree())};
  const auto& chain = g.chain();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(out.size() * it->orbit.size());
    for (int b : it->orbit)
      for (const auto& e : out) next.push_back(it->transversal[static_cast<std::size_t>(b)] * e);
    out = std::move(next);
  }
  return out;
}

struct Fingerprint {
  std::uint64_t order;
  std::vector<int> orbit_lengths;
  std::map<std::vector<int>, int> cycle_types;
  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const PermGroup& g, const std::vector<Permutation>& elems) {
  Fingerprint f{g.order(), {}, {}};
  std::vector<bool> seen(static_cast<std::size_t>(g.degree()), false);
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    const auto orb = g.orbit(i);
    for (int j : orb) seen[static_cast<std::size_t>(j)] = true;
    f.orbit_lengths.push_back(static_cast<int>(orb.size()));
  }
  std::sort(f.orbit_lengths.begin(), f.orbit_lengths.end());
  for (const auto& e : elems) ++f.cycle_types[e.cycle_type()];
  return f;
}

std::uint64_t set_hash(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  std::uint64_t h = 1469598103934665603ULL;
  for (Key k : keys) {
    h ^= k + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return h ^ keys.size();
}

std::vector<Permutation> reduce_generators(const std::vector<Permutation>& gens, int n) {
  std::vector<Permutation> kept;
  PermGroup current = PermGroup::trivial(n);
  for (const auto& g : gens) {
    if (current.contains(g)) continue;
    kept.push_back(g);
    current = PermGroup::build(kept);
  }
  if (kept.empty()) kept.push_back(Permutation::identity(n));
  return kept;
}

struct Class {
  PermGroup group;
  Fingerprint print;
};

class Closure {
public:
  Closure(int n, bool transitive_only)
      : n_(n), transitive_only_(transitive_only), all_(all_permutations(n)) {}

  /// Adds g if it is new up to conjugacy; returns true when added.
  bool offer(const PermGroup& g) {
    if (transitive_only_ && !g.is_transitive()) return false;
    const auto elems = elements(g);
    std::vector<Key> keys;
    keys.reserve(elems.size());
    for (const auto& e : elems) keys.push_back(pack(e));
    if (!seen_.insert(set_hash(keys)).second) return false;
    auto print = fingerprint(g, elems);
    for (const auto& c : classes_)
      if (c.print == print && conjugate(c.group, g)) return false;
    classes_.push_back({g, std::move(print)});
    return true;
  }

  void run() {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const PermGroup k = classes_[i].group;
      std::unordered_set<Key> visited;
      for (const auto& s : all_) {
        if (visited.count(pack(s))) continue;
        mark_double_coset(k, s, visited);
        if (k.contains(s)) continue;
        auto gens = k.generators();
        gens.push_back(s);
        offer(PermGroup::build(reduce_generators(gens, n_)));
      }
    }
  }

  const std::vector<Class>& classes() const { return classes_; }

private:
  bool conjugate(const PermGroup& a, const PermGroup& b) const {
    for (const auto& s : all_) {
      const auto si = s.inverse();
      bool ok = true;
      for (const auto& g : b.generators())
        if (!a.contains(s * g * si)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }

  void mark_double_coset(const PermGroup& k, const Permutation& s,
                         std::unordered_set<Key>& visited) const {
    std::vector<Permutation> stack{s};
    visited.insert(pack(s));
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (const auto& g : k.generators())
        for (const auto& y : {g * x, x * g})
          if (visited.insert(pack(y)).second) stack.push_back(y);
    }
  }

  int n_;
  bool transitive_only_;
  std::vector<Permutation> all_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<Class> classes_;
};

/// Transitive subgroups of the Sylow 2-subgroup of S_8, by upward closure
/// over its subgroups.
std::vector<PermGroup> transitive_two_groups() {
  const PermGroup syl = PermGroup::build(parse_generator_list(
      "(1 2),(3 4),(1 3)(2 4),(5 6),(7 8),(5 7)(6 8),(1 5)(2 6)(3 7)(4 8)", 8));
  const auto elems = elements(syl);
  std::vector<PermGroup> subgroups{PermGroup::trivial(8)};
  std::unordered_set<std::uint64_t> seen;
  {
    std::vector<Key> id{pack(Permutation::identity(8))};
    seen.insert(set_hash(id));
  }
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const PermGroup k = subgroups[i];
    if (k.is_transitive()) out.push_back(k);
    for (const auto& e : elems) {
      if (k.contains(e)) continue;
      auto gens = k.generators();
      gens.push_back(e);
      PermGroup h = PermGroup::build(reduce_generators(gens, 8));
      std::vector<Key> keys;
      for (const auto& x : elements(h)) keys.push_back(pack(x));
      if (seen.insert(set_hash(keys)).second) subgroups.push_back(std::move(h));
    }
  }
  std::cerr << "Sylow 2-subgroup of S_8: " << subgroups.size() << " subgroups, " << out.size()
            << " transitive\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "transitive_groups.json";
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (int n = 1; n <= 8; ++n) {
    std::vector<Class> found;
    if (n < 8) {
      Closure c(n, false);
      c.offer(PermGroup::trivial(n));
      c.run();
      for (const auto& cls : c.classes())
        if (cls.group.is_transitive()) found.push_back(cls);
    } else {
      Closure c(n, true);
      for (const auto& g : transitive_two_groups()) c.offer(g);
      c.run();
      found = c.classes();
    }
    std::sort(found.begin(), found.end(),
              [](const Class& a, const Class& b) { return a.print < b.print; });
    std::cerr << "degree " << n << ": " << found.size() << " transitive classes\n";
    int index = 0;
    for (const auto& cls : found) {
      nlohmann::ordered_json g;
      g["label"] = "deg" + std::to_string(n) + "-" + std::to_string(++index);
      g["degree"] = n;
      g["order"] = cls.group.order();
      auto gens = nlohmann::ordered_json::array();
      for (const auto& p : cls.group.generators()) gens.push_back(p.to_string());
      g["generators"] = gens;
      groups.push_back(g);
    }
  }
  nlohmann::ordered_json doc;
  doc["groups"] = groups;
  std::ofstream(path) << doc.dump(1) << "\n";
  return 0;
}
