#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gql/json_io.hpp"

namespace gql {

struct FixtureGroup {
  std::string label;
  int degree = 0;
  std::vector<std::string> generators;
};

/// {"groups": [{"label", "degree", "generators", ...}, ...]}; extra fields
/// such as "order" are ignored. Throws ParseError.
std::vector<FixtureGroup> fixtures_from_json(const Json& j);
std::vector<FixtureGroup> load_fixtures(const std::string& path);

/// Lemma checks for one fixture group. A check that could not be evaluated
/// (non-transitive input, failed block structure) is false.
struct LemmaChecks {
  bool divisibility = false;          // (m + 1) | n
  bool block_sizes = false;           // every block has m + 1 points
  bool m_point_independent = false;   // every point lies in m transpositions
  bool h_order = false;               // |H| = ((m + 1)!)^{n'}
  bool h_normal = false;
  bool h_block_restriction = false;   // H acts as the full S_{m+1} on each block
  bool order_product = false;         // |G| = |H| |G / H image|
  bool solvable_bound = true;         // m + 1 <= 4 when solvable

  bool all() const;
};

struct CensusRecord {
  std::string label;
  int degree = 0;
  std::uint64_t order = 0;
  bool transitive = false;
  bool solvable = false;
  int m = 0;
  int n_prime = 0;
  std::uint64_t h_order = 0;
  std::uint64_t quotient_order = 0;
  LemmaChecks checks;
  int threshold_genus = 0;       // least genus of general type, m + 2
  bool threshold_consistent = false;  // classify_quotient agrees for 0 <= g <= 12
  std::string error;             // set when the record is flagged

  bool ok() const { return error.empty() && checks.all() && threshold_consistent; }
};

CensusRecord census_record(const FixtureGroup& fixture);

/// Evaluates fixtures concurrently; the result follows input order.
std::vector<CensusRecord> run_census(const std::vector<FixtureGroup>& fixtures);

Json to_json(const CensusRecord& r);

}  // namespace gql
