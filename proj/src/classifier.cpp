#include "gql/classifier.hpp"

#include <algorithm>

#include "gql/error.hpp"
#include "gql/transpositions.hpp"

namespace gql {

const char* to_string(AdvisoryKind kind) {
  switch (kind) {
    case AdvisoryKind::Fact: return "FACT";
    case AdvisoryKind::Conditional: return "CONDITIONAL";
    case AdvisoryKind::Warning: return "WARNING";
    case AdvisoryKind::NoConclusion: return "NO_CONCLUSION";
  }
  return "?";
}

const char* to_string(KodairaKind kind) {
  switch (kind) {
    case KodairaKind::GeneralType: return "GeneralType";
    case KodairaKind::BirationalAbelian: return "BirationalAbelian";
    case KodairaKind::Uniruled: return "Uniruled";
  }
  return "?";
}

QuotientReport classify_quotient(const PermGroup& group, int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  if (!group.is_transitive()) throw DomainError("classify_quotient requires a transitive group");

  QuotientReport r;
  r.n = group.degree();
  r.transitive = true;
  r.order = group.order();
  r.m = transposition_count_m(group);
  r.n_prime = r.n / (r.m + 1);
  r.solvable = is_solvable(group);
  r.genus = genus;
  r.threshold_genus = r.m + 2;
  r.is_general_type = genus > r.m + 1;

  if (genus <= 1)
    r.advisories.push_back({AdvisoryKind::Warning, "low_genus",
                            "genus " + std::to_string(genus) +
                                " is below 2; the classification is stated for smooth curves "
                                "of genus at least 2",
                            "general-type criterion"});

  if (r.m == 0 && genus >= 2)
    r.advisories.push_back({AdvisoryKind::Fact, "no_transpositions",
                            "G contains no transpositions, so C^n/G is of general type for "
                            "every curve of genus at least 2",
                            "no-transposition case"});

  if (r.m > 0)
    r.advisories.push_back(
        {AdvisoryKind::Fact, "symmetric_power_factorization",
         "C^n -> C^n/G factors through (Sym^" + std::to_string(r.m + 1) + " C)^" +
             std::to_string(r.n_prime) + "; Sym^" + std::to_string(r.m + 1) + " C is " +
             to_string(sym_power_kind(genus, r.m + 1)),
         "transposition subgroup H = S_{m+1}^{n'}"});

  if (r.n == 2 && r.m == 1 && genus == 2)
    r.advisories.push_back({AdvisoryKind::Fact, "genus2_example",
                            "C^2/S_2 is birational to the Jacobian and has Kodaira dimension 2 "
                            "(stated value; an abelian surface has Kodaira "
                            "dimension 0)",
                            "genus-2 worked example"});
  if (r.n == 4 && r.m == 3 && genus == 3)
    r.advisories.push_back({AdvisoryKind::Fact, "genus3_example",
                            "C^4/S_4 is uniruled over the Jacobian, Kodaira dimension -infinity",
                            "genus-3 worked example"});

  if (r.solvable && genus >= 5) {
    r.advisories.push_back({AdvisoryKind::Fact, "solvable_general_type",
                            "G is solvable and g >= 5, so C^n/G is of general type",
                            "solvable corollary"});
    r.advisories.push_back({AdvisoryKind::Conditional, "bombieri_lang",
                            "assuming the Bombieri-Lang conjecture, rational points on C^n/G "
                            "are not Zariski dense",
                            "Bombieri-Lang consequence"});
  }
  return r;
}

TranspositionBound solvable_transposition_bound(const PermGroup& group) {
  TranspositionBound b;
  b.m = group.is_transitive() ? transposition_count_m(group) : [&] {
    // m is only well defined for transitive groups; use the largest class.
    int best = 0;
    std::vector<int> count(static_cast<std::size_t>(group.degree()), 0);
    for (auto [i, j] : transpositions(group)) {
      best = std::max(best, ++count[static_cast<std::size_t>(i)]);
      best = std::max(best, ++count[static_cast<std::size_t>(j)]);
    }
    return best;
  }();
  b.solvable = is_solvable(group);
  b.applicable = b.solvable;
  b.satisfied = !b.solvable || b.m + 1 <= 4;
  return b;
}

KodairaKind sym_power_kind(int genus, int n) {
  if (genus < 0 || n < 1) throw DomainError("sym_power_kind needs genus >= 0 and n >= 1");
  if (n < genus) return KodairaKind::GeneralType;
  if (n == genus) return KodairaKind::BirationalAbelian;
  return KodairaKind::Uniruled;
}

Advisory zariski_obstruction(const PermGroup& group, int genus) {
  if (!is_solvable(group))
    return {AdvisoryKind::NoConclusion, "zariski_obstruction", "G is not solvable",
            "generic-curve corollary"};
  if (!group.is_transitive())
    return {AdvisoryKind::NoConclusion, "zariski_obstruction",
            "G is not transitive", "generic-curve corollary"};
  if (genus < 7)
    return {AdvisoryKind::NoConclusion, "zariski_obstruction",
            "genus below 7", "generic-curve corollary"};
  return {AdvisoryKind::Conditional, "zariski_obstruction",
          "for sufficiently generic C of genus >= 7, no curve of fibre type in C^n/G has "
          "Zariski dense rational points",
          "generic-curve corollary"};
}

}  // namespace gql
