#include "gql/census.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "gql/classifier.hpp"
#include "gql/transpositions.hpp"

namespace gql {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// The subgroup of Sym(block) generated by the restrictions of gens, which
// must all stabilize the block.
PermGroup restrict_to_block(const std::vector<Permutation>& gens, const std::vector<int>& block) {
  const int k = static_cast<int>(block.size());
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    std::vector<int> img(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const int target = g.image(block[static_cast<std::size_t>(i)]);
      const auto it = std::find(block.begin(), block.end(), target);
      if (it == block.end()) throw InvariantError("H does not stabilize a transposition block");
      img[static_cast<std::size_t>(i)] = static_cast<int>(it - block.begin());
    }
    out.emplace_back(std::move(img));
  }
  if (out.empty()) out.push_back(Permutation::identity(k));
  return PermGroup::build(std::move(out));
}

void evaluate(const PermGroup& g, CensusRecord& r) {
  const int n = g.degree();
  std::vector<int> per_point(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : transpositions(g)) {
    ++per_point[static_cast<std::size_t>(i)];
    ++per_point[static_cast<std::size_t>(j)];
  }
  r.m = per_point.front();
  r.checks.m_point_independent =
      std::all_of(per_point.begin(), per_point.end(), [&](int c) { return c == r.m; });
  r.checks.divisibility = n % (r.m + 1) == 0;
  r.checks.solvable_bound = !r.solvable || r.m + 1 <= 4;
  r.threshold_genus = r.m + 2;

  const Partition part = transposition_partition(g);
  r.n_prime = static_cast<int>(part.blocks.size());
  r.checks.block_sizes = std::all_of(part.blocks.begin(), part.blocks.end(), [&](const auto& b) {
    return static_cast<int>(b.size()) == r.m + 1;
  });

  const PermGroup h = transposition_subgroup(g);
  r.h_order = h.order();
  r.checks.h_order = h.order() == power(factorial(r.m + 1), r.n_prime);
  r.checks.h_normal = is_normal(g, h);
  r.checks.h_block_restriction = std::all_of(part.blocks.begin(), part.blocks.end(), [&](const auto& b) {
    return restrict_to_block(h.generators(), b).order() == factorial(r.m + 1);
  });
  const BlockAction q = quotient_on_blocks(g, part);
  r.quotient_order = q.quotient.order();
  r.checks.order_product = g.order() == h.order() * q.quotient.order();

  bool consistent = true;
  for (int genus = 0; genus <= 12; ++genus) {
    const auto report = classify_quotient(g, genus);
    consistent = consistent && report.m == r.m && report.threshold_genus == r.threshold_genus &&
                 report.is_general_type == (genus > r.m + 1);
  }
  r.threshold_consistent = consistent;
}

}  // namespace

bool LemmaChecks::all() const {
  return divisibility && block_sizes && m_point_independent && h_order && h_normal &&
         h_block_restriction && order_product && solvable_bound;
}

std::vector<FixtureGroup> fixtures_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
    throw ParseError("fixtures: expected an object with a \"groups\" array");
  std::vector<FixtureGroup> out;
  for (const auto& g : j["groups"]) {
    FixtureGroup f;
    try {
      f.label = g.value("label", "group" + std::to_string(out.size() + 1));
      f.degree = g.at("degree").get<int>();
      f.generators = g.at("generators").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("fixtures: malformed group entry: ") + e.what());
    }
    if (f.degree < 1 || f.degree > kMaxDegree)
      throw ParseError("fixtures: " + f.label + " has an out-of-range degree");
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<FixtureGroup> load_fixtures(const std::string& path) {
  return fixtures_from_json(read_json_file(path));
}

CensusRecord census_record(const FixtureGroup& fixture) {
  CensusRecord r;
  r.label = fixture.label;
  r.degree = fixture.degree;
  std::vector<Permutation> gens;
  for (const auto& s : fixture.generators) gens.push_back(parse_permutation(s, fixture.degree));
  if (gens.empty()) gens.push_back(Permutation::identity(fixture.degree));
  const PermGroup g = PermGroup::build(std::move(gens));
  r.order = g.order();
  r.transitive = g.is_transitive();
  r.solvable = is_solvable(g);
  if (!r.transitive) {
    r.checks.solvable_bound = false;
    r.error = "group is not transitive";
    return r;
  }
  try {
    evaluate(g, r);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<CensusRecord> run_census(const std::vector<FixtureGroup>& fixtures) {
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<CensusRecord> out(fixtures.size());
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < std::min(workers, fixtures.size()); ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < fixtures.size(); i += workers) out[i] = census_record(fixtures[i]);
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

Json to_json(const CensusRecord& r) {
  Json j;
  j["label"] = r.label;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["transitive"] = r.transitive;
  j["solvable"] = r.solvable;
  j["m"] = r.m;
  j["n_prime"] = r.n_prime;
  j["h_order"] = r.h_order;
  j["quotient_order"] = r.quotient_order;
  Json c;
  c["divisibility"] = r.checks.divisibility;
  c["block_sizes"] = r.checks.block_sizes;
  c["m_point_independent"] = r.checks.m_point_independent;
  c["h_order"] = r.checks.h_order;
  c["h_normal"] = r.checks.h_normal;
  c["h_block_restriction"] = r.checks.h_block_restriction;
  c["order_product"] = r.checks.order_product;
  c["solvable_bound"] = r.checks.solvable_bound;
  j["checks"] = c;
  j["threshold_genus"] = r.threshold_genus;
  j["threshold_consistent"] = r.threshold_consistent;
  j["ok"] = r.ok();
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace gql
