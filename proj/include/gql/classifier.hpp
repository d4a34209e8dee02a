#pragma once

#include <string>
#include <vector>

#include "gql/perm_group.hpp"

namespace gql {

/// Kind of statement attached to a report. Conditional statements depend on
/// an unproven conjecture or on a genericity hypothesis that is not checked.
enum class AdvisoryKind { Fact, Conditional, Warning, NoConclusion };

struct Advisory {
  AdvisoryKind kind;
  std::string tag;     // stable identifier, e.g. "solvable_general_type"
  std::string text;
  std::string source;  // which result the statement rests on
};

const char* to_string(AdvisoryKind kind);

struct QuotientReport {
  int n = 0;
  int m = 0;
  int n_prime = 0;
  bool solvable = false;
  bool transitive = false;
  int genus = 0;
  bool is_general_type = false;
  int threshold_genus = 0;  // m + 2
  std::uint64_t order = 0;
  std::vector<Advisory> advisories;
};

enum class KodairaKind { GeneralType, BirationalAbelian, Uniruled };

const char* to_string(KodairaKind kind);

/// C^n / G is of general type exactly when genus > m + 1. Requires a
/// transitive G and genus >= 0; genus <= 1 is accepted with a warning.
QuotientReport classify_quotient(const PermGroup& group, int genus);

struct TranspositionBound {
  int m = 0;
  bool solvable = false;
  bool applicable = false;  // false for non-solvable groups
  bool satisfied = true;    // m + 1 <= 4 when applicable
};

/// A solvable transitive group has no S_5 among its transposition blocks,
/// so m + 1 <= 4.
TranspositionBound solvable_transposition_bound(const PermGroup& group);

/// Sym^n C for a curve of genus g: general type for n < g, birational to an
/// abelian variety for n == g, uniruled for n > g.
KodairaKind sym_power_kind(int genus, int n);

/// Fibre-type obstruction for solvable transitive G and genus >= 7, valid
/// only for sufficiently generic curves; otherwise a NoConclusion advisory.
Advisory zariski_obstruction(const PermGroup& group, int genus);

}  // namespace gql
