#include <doctest.h>

#include <algorithm>
#include <random>

#include "gql/error.hpp"
#include "gql/perm_group.hpp"
#include "gql/transpositions.hpp"
#include "oracles.hpp"

using namespace gql;

namespace {

PermGroup group(const char* gens, int degree) {
  return PermGroup::build(parse_generator_list(gens, degree));
}

const char* kDihedral = "(1 2 3 4),(1 3)";

}  // namespace

TEST_CASE("parse_permutation reads 1-based cycle notation") {
  CHECK(parse_permutation("(1 2 3 4)", 4).images() == std::vector<int>{1, 2, 3, 0});
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("()", 3).degree() == 3);
  CHECK(parse_permutation("(1, 3)(2 4)", 4).images() == std::vector<int>{2, 3, 0, 1});
  CHECK(parse_permutation("(2 5)", 6).to_string() == "(2 5)");
}

TEST_CASE("parse_permutation rejects malformed input") {
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(0 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)", 17), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2)x", 3), ParseError);
}

TEST_CASE("generator lists split on top-level commas only") {
  auto gens = parse_generator_list("(1 2 3 4),(1 3)", 4);
  REQUIRE(gens.size() == 2);
  CHECK(gens[1] == Permutation::transposition(4, 0, 2));
  auto single = parse_generator_list("(1, 2)(3, 4)", 4);
  CHECK(single.size() == 1);
}

TEST_CASE("compose applies the right factor first") {
  const auto p = parse_permutation("(1 2)", 3);
  const auto q = parse_permutation("(2 3)", 3);
  // Evaluated pointwise: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1.
  CHECK(compose(p, q) == parse_permutation("(1 2 3)", 3));
  CHECK(compose(p, Permutation::identity(3)) == p);
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK_THROWS_AS(compose(p, Permutation::identity(4)), DomainError);
}

TEST_CASE("build_group orders") {
  CHECK(group("(1 2),(1 2 3)", 3).order() == 6);
  CHECK(group("(1 2 3 4)", 4).order() == 4);
  const auto d8 = group(kDihedral, 4);
  CHECK(d8.order() == oracle::closure(d8.generators(), 4).size());
  CHECK(d8.order() == 8);
  CHECK(PermGroup::symmetric(8).order() == 40320);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK_THROWS_AS(PermGroup::build({}), DomainError);
  CHECK_THROWS_AS(PermGroup::build({Permutation::identity(3), Permutation::identity(4)}),
                  DomainError);
}

TEST_CASE("contains") {
  CHECK(group("(1 2 3 4)", 4).contains(parse_permutation("(1 3)(2 4)", 4)));
  CHECK_FALSE(group("(1 2 3)", 3).contains(parse_permutation("(1 2)", 3)));
  CHECK(group(kDihedral, 4).contains(Permutation::identity(4)));
  CHECK_THROWS_AS(group("(1 2 3)", 3).contains(Permutation::identity(4)), DomainError);
}

TEST_CASE("stabilizer chain invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Permutation> gens{oracle::random_permutation(n, rng),
                                  oracle::random_permutation(n, rng)};
    const auto g = PermGroup::build(gens);
    std::uint64_t prod = 1;
    for (const auto& lv : g.chain()) prod *= lv.orbit.size();
    CHECK(prod == g.order());
    CHECK(oracle::factorial(n) % g.order() == 0);
    for (const auto& s : g.generators()) CHECK(g.sift(s).residue.is_identity());
    CHECK(g.order() == oracle::closure(gens, n).size());
  }
}

TEST_CASE("order is invariant under reordering and conjugating generators") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Permutation> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_permutation(n, rng));
    const auto g = PermGroup::build(gens);
    auto reordered = gens;
    std::reverse(reordered.begin(), reordered.end());
    CHECK(PermGroup::build(reordered).order() == g.order());
    std::vector<Permutation> conjugated;
    for (const auto& s : gens) conjugated.push_back(conjugate(s, g.random_element(rng)));
    // Conjugates by elements of G generate a subgroup of G, and G itself
    // once the originals are included.
    auto both = conjugated;
    both.insert(both.end(), gens.begin(), gens.end());
    CHECK(PermGroup::build(both).order() == g.order());
    CHECK(g.order() % PermGroup::build(conjugated).order() == 0);
  }
}

TEST_CASE("is_transitive") {
  CHECK(group("(1 2 3 4)", 4).is_transitive());
  CHECK_FALSE(group("(1 2)", 3).is_transitive());
  CHECK_FALSE(group("(1 2),(3 4)", 4).is_transitive());
}

TEST_CASE("is_solvable") {
  CHECK(is_solvable(PermGroup::symmetric(4)));
  CHECK_FALSE(is_solvable(PermGroup::symmetric(5)));
  CHECK(is_solvable(PermGroup::trivial(3)));
  CHECK(derived_series_orders(PermGroup::symmetric(4)) == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(derived_series_orders(PermGroup::symmetric(5)) == std::vector<std::uint64_t>{120, 60});
}

TEST_CASE("is_solvable agrees with the brute-force derived series") {
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 40) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::vector<Permutation> gens{oracle::random_permutation(n, rng)};
    if (rng() % 2) gens.push_back(oracle::random_permutation(n, rng));
    const auto g = PermGroup::build(gens);
    if (g.order() > 1000) continue;
    const auto elems = oracle::closure(gens, n);
    CHECK(is_solvable(g) == oracle::solvable(elems, n));
    ++checked;
  }
}

TEST_CASE("transpositions and m") {
  const auto d8 = group(kDihedral, 4);
  // Brute force: every order-2 element of D8 with cycle type (1,1,2).
  std::vector<PointPair> expected;
  for (const auto& e : oracle::as_vector(oracle::closure(d8.generators(), 4)))
    if (e.cycle_type() == std::vector<int>{1, 1, 2}) {
      auto c = e.cycles().front();
      expected.emplace_back(c[0], c[1]);
    }
  std::sort(expected.begin(), expected.end());
  CHECK(transpositions(d8) == expected);
  CHECK(transpositions(d8) == std::vector<PointPair>{{0, 2}, {1, 3}});
  CHECK(transpositions(group("(1 2 3)", 3)).empty());
  CHECK(transpositions(PermGroup::symmetric(4)).size() == 6);

  CHECK(transposition_count_m(PermGroup::symmetric(4)) == 3);
  CHECK(transposition_count_m(d8) == 1);
  CHECK(transposition_count_m(group("(1 2 3 4)", 4)) == 0);
  CHECK_THROWS_AS(transposition_count_m(group("(1 2)", 3)), DomainError);
}

TEST_CASE("transposition_partition") {
  const auto part = transposition_partition(group(kDihedral, 4));
  CHECK(part.blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(transposition_partition(PermGroup::symmetric(4)).blocks ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(transposition_partition(group("(1 2 3 4)", 4)).blocks.size() == 4);
  CHECK_THROWS_AS(transposition_partition(group("(1 2)", 3)), DomainError);
}

TEST_CASE("transposition_subgroup and normality") {
  const auto d8 = group(kDihedral, 4);
  const auto h = transposition_subgroup(d8);
  CHECK(h.order() == 4);
  CHECK(oracle::closure(h.generators(), 4) ==
        oracle::closure(parse_generator_list("(1 3),(2 4)", 4), 4));
  CHECK(is_normal(d8, h));
  CHECK(transposition_subgroup(PermGroup::symmetric(4)).order() == 24);
  CHECK(transposition_subgroup(group("(1 2 3 4)", 4)).is_trivial());

  CHECK_FALSE(is_normal(PermGroup::symmetric(3), group("(1 2)", 3)));
  CHECK(is_normal(d8, PermGroup::trivial(4)));
  CHECK_THROWS_AS(is_normal(group("(1 2 3 4)", 4), group("(1 2)", 4)), DomainError);
}

TEST_CASE("quotient_on_blocks") {
  const auto d8 = group(kDihedral, 4);
  const auto q = quotient_on_blocks(d8, transposition_partition(d8));
  CHECK(q.quotient.order() == 2);
  CHECK(q.generator_images[0] == Permutation::transposition(2, 0, 1));
  CHECK(q.generator_images[1].is_identity());

  const auto s4 = PermGroup::symmetric(4);
  CHECK(quotient_on_blocks(s4, transposition_partition(s4)).quotient.order() == 1);

  const auto c4 = group("(1 2 3 4)", 4);
  const auto qc = quotient_on_blocks(c4, transposition_partition(c4));
  CHECK(qc.quotient.order() == 4);
  CHECK(qc.generator_images[0] == c4.generators()[0]);

  Partition bad{{{0, 1}, {2, 3}}};
  CHECK_THROWS_AS(quotient_on_blocks(d8, bad), DomainError);
}

TEST_CASE("cyclic_containment") {
  const auto d8 = group(kDihedral, 4);
  CHECK(cyclic_containment(parse_permutation("(1 2 3 4)", 4), d8));
  CHECK_FALSE(cyclic_containment(parse_permutation("(1 2)", 4), group("(1 2 3 4)", 4)));
  CHECK(cyclic_containment(Permutation::identity(4), group("(1 2 3 4)", 4)));
  CHECK_THROWS_AS(cyclic_containment(Permutation::identity(3), d8), DomainError);
}

TEST_CASE("membership agrees with closure on random subgroups") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 2);
    std::vector<Permutation> gens{oracle::random_permutation(n, rng),
                                  oracle::random_permutation(n, rng)};
    const auto g = PermGroup::build(gens);
    if (g.order() > 5040) continue;
    const auto elems = oracle::closure(gens, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const auto t = Permutation::transposition(n, i, j);
        CHECK(g.contains(t) == (elems.count(t) == 1));
      }
    for (int k = 0; k < 20; ++k) {
      const auto w = oracle::random_permutation(n, rng);
      CHECK(g.contains(w) == (elems.count(w) == 1));
    }
  }
}
