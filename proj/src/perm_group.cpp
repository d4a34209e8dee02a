#include "gql/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gql/error.hpp"

namespace gql {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  schreier_sims();
}

PermGroup PermGroup::build(std::vector<Permutation> generators) {
  if (generators.empty()) throw DomainError("a group needs at least one generator");
  const int n = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != n)
      throw DomainError("generator degree mismatch: " + std::to_string(g.degree()) + " vs " +
                        std::to_string(n));
  return PermGroup(n, std::move(generators));
}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Permutation::identity(degree)});
}

PermGroup PermGroup::symmetric(int degree) {
  if (degree == 1) return trivial(1);
  std::vector<int> cyc(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) cyc[static_cast<std::size_t>(i)] = i;
  return build({Permutation::transposition(degree, 0, 1), Permutation::from_cycles(degree, {cyc})});
}

void PermGroup::rebuild_level(std::size_t i) {
  Level& lv = levels_[i];
  lv.orbit.assign(1, lv.base_point);
  lv.in_orbit.assign(static_cast<std::size_t>(degree_), false);
  lv.transversal.assign(static_cast<std::size_t>(degree_), Permutation(degree_));
  lv.in_orbit[static_cast<std::size_t>(lv.base_point)] = true;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const int pt = lv.orbit[k];
    for (const auto& s : lv.generators) {
      const int img = s(pt);
      if (lv.in_orbit[static_cast<std::size_t>(img)]) continue;
      lv.in_orbit[static_cast<std::size_t>(img)] = true;
      lv.transversal[static_cast<std::size_t>(img)] = s * lv.transversal[static_cast<std::size_t>(pt)];
      lv.orbit.push_back(img);
    }
  }
}

PermGroup::SiftResult PermGroup::sift(const Permutation& p, std::size_t from_level) const {
  Permutation g = p;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level& lv = levels_[l];
    const int b = g(lv.base_point);
    if (!lv.in_orbit[static_cast<std::size_t>(b)]) return {g, l};
    g = lv.transversal[static_cast<std::size_t>(b)].inverse() * g;
  }
  return {g, levels_.size()};
}

void PermGroup::schreier_sims() {
  std::vector<Permutation> gens;
  for (const auto& g : generators_)
    if (!g.is_identity()) gens.push_back(g);

  std::vector<int> base;
  for (const auto& g : gens) {
    bool fixes_all = std::all_of(base.begin(), base.end(), [&](int b) { return g(b) == b; });
    if (fixes_all) base.push_back(g.first_moved());
  }
  levels_.clear();
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level lv;
    lv.base_point = base[i];
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < i; ++k) fixes_prefix = fixes_prefix && g(base[k]) == base[k];
      if (fixes_prefix) lv.generators.push_back(g);
    }
    levels_.push_back(std::move(lv));
    rebuild_level(i);
  }

  // Work from the deepest level upward; whenever a Schreier generator fails
  // to sift, its residue joins every level it stabilizes and the scan resumes
  // from the deepest touched level.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[li].orbit.size() && !restart; ++k) {
      const int beta = levels_[li].orbit[k];
      for (std::size_t s = 0; s < levels_[li].generators.size(); ++s) {
        const Level& lv = levels_[li];
        const Permutation& gen = lv.generators[s];
        const Permutation g1 = gen * lv.transversal[static_cast<std::size_t>(beta)];
        const Permutation& u1 = lv.transversal[static_cast<std::size_t>(gen(beta))];
        if (g1 == u1) continue;
        auto [h, j] = sift(u1.inverse() * g1, li + 1);
        if (j == levels_.size()) {
          if (h.is_identity()) continue;
          Level fresh;
          fresh.base_point = h.first_moved();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].generators.push_back(h);
          rebuild_level(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& lv : levels_)
    for (const auto& g : lv.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw DomainError("degree mismatch: element of degree " + std::to_string(p.degree()) +
                      ", group of degree " + std::to_string(degree_));
  auto [residue, level] = sift(p);
  return level == levels_.size() && residue.is_identity();
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators_) {
      const int img = g(out[k]);
      if (!seen[static_cast<std::size_t>(img)]) {
        seen[static_cast<std::size_t>(img)] = true;
        out.push_back(img);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PermGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    const auto& orb = it->orbit;
    const int b = orb[static_cast<std::size_t>(rng() % orb.size())];
    g = it->transversal[static_cast<std::size_t>(b)] * g;
  }
  return g;
}

bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) return false;
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Permutation& g) { return group.contains(g); });
}

PermGroup normal_closure(const PermGroup& group, std::vector<Permutation> gens) {
  const int n = group.degree();
  std::vector<Permutation> kept;
  for (auto& g : gens)
    if (!g.is_identity()) kept.push_back(std::move(g));
  if (kept.empty()) return PermGroup::trivial(n);

  PermGroup closure = PermGroup::build(kept);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = closure.generators();
    for (const auto& h : current) {
      for (const auto& g : group.generators()) {
        Permutation c = g * h * g.inverse();
        if (closure.contains(c)) continue;
        kept.push_back(std::move(c));
        closure = PermGroup::build(kept);
        grew = true;
      }
    }
  }
  return closure;
}

PermGroup derived_subgroup(const PermGroup& group) {
  const auto& gens = group.generators();
  std::vector<Permutation> comms;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) comms.push_back(commutator(gens[a], gens[b]));
  return normal_closure(group, std::move(comms));
}

std::vector<std::uint64_t> derived_series_orders(const PermGroup& group) {
  std::vector<std::uint64_t> orders{group.order()};
  PermGroup current = group;
  while (current.order() > 1) {
    PermGroup next = derived_subgroup(current);
    if (next.order() == current.order()) break;
    orders.push_back(next.order());
    current = std::move(next);
  }
  return orders;
}

bool is_solvable(const PermGroup& group) {
  return derived_series_orders(group).back() == 1;
}

bool is_normal(const PermGroup& group, const PermGroup& sub) {
  if (!is_subgroup(sub, group)) throw DomainError("H is not a subgroup of G");
  for (const auto& g : group.generators())
    for (const auto& h : sub.generators())
      if (!sub.contains(g * h * g.inverse())) return false;
  return true;
}

}  // namespace gql
