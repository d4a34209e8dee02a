#include "gql/json_io.hpp"

#include <fstream>
#include <sstream>

namespace gql {

namespace {

template <class T>
T get_field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string(what) + ": field \"" + key + "\" has the wrong type");
  }
}

BigRational coefficient(const Json& c) {
  if (c.is_string()) return parse_rational(c.get<std::string>());
  if (c.is_number_integer()) return BigRational(BigInt(std::to_string(c.get<std::int64_t>())));
  throw ParseError("curve: coefficients must be decimal strings or integers");
}

int max_point(const std::string& text) {
  int best = 0, cur = 0;
  bool in_number = false;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') {
      cur = in_number ? std::min(cur * 10 + (ch - '0'), 1000) : ch - '0';
      in_number = true;
    } else {
      if (in_number) best = std::max(best, cur);
      in_number = false;
    }
  }
  if (in_number) best = std::max(best, cur);
  return best;
}

}  // namespace

PermGroup group_from_json(const Json& j) {
  const int degree = get_field<int>(j, "degree", "group");
  const auto gens = get_field<std::vector<std::string>>(j, "generators", "group");
  if (degree < 1 || degree > kMaxDegree)
    throw ParseError("group: degree must be between 1 and " + std::to_string(kMaxDegree));
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_permutation(g, degree));
  if (perms.empty()) perms.push_back(Permutation::identity(degree));
  return PermGroup::build(std::move(perms));
}

Json group_to_json(const PermGroup& g) {
  Json j;
  j["degree"] = g.degree();
  auto gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_string());
  j["generators"] = gens;
  return j;
}

PermGroup parse_group_spec(const std::string& text, std::optional<int> degree) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("group: invalid JSON: ") + e.what());
    }
    if (degree && j.contains("degree") && j["degree"] != *degree)
      throw ParseError("group: --degree disagrees with the JSON degree");
    return group_from_json(j);
  }
  const int n = degree ? *degree : max_point(text);
  if (n < 1) throw ParseError("group: cannot infer the degree from \"" + text + "\"");
  auto gens = parse_generator_list(text, n);
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return PermGroup::build(std::move(gens));
}

PlaneCurve curve_from_json(const Json& j) {
  const int degree = get_field<int>(j, "degree", "curve");
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("curve: missing \"terms\" array");
  std::vector<std::pair<Exponent, BigRational>> terms;
  BigInt den = 1;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 3)
      throw ParseError("curve: each term must be [[a, b, c], \"coeff\"]");
    Exponent e{};
    for (std::size_t i = 0; i < 3; ++i) {
      if (!t[0][i].is_number_integer() || t[0][i].get<int>() < 0)
        throw ParseError("curve: exponents must be nonnegative integers");
      e[i] = t[0][i].get<int>();
    }
    const BigRational c = coefficient(t[1]);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    terms.emplace_back(e, c);
  }
  MultiPoly form;
  for (const auto& [e, c] : terms) {
    const BigRational scaled = c * BigRational(den);
    form = form + MultiPoly::monomial(e, scaled.get_num());
  }
  if (form.is_zero()) throw DomainError("curve: the form is zero");
  const auto h = form.homogeneous_degree();
  if (!h || *h != degree)
    throw DomainError("curve: the form is not homogeneous of degree " + std::to_string(degree));
  return PlaneCurve(std::move(form));
}

Json multipoly_to_json(const MultiPoly& f) {
  auto terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json::array({Json::array({e[0], e[1], e[2]}), to_string(c)}));
  return terms;
}

Json curve_to_json(const PlaneCurve& c) {
  Json j;
  j["degree"] = c.degree();
  j["terms"] = multipoly_to_json(c.form());
  return j;
}

Json zpoly_to_json(const ZPoly& f) { return coeff_strings(f); }

Json matrix_to_json(const IntMatrix3& m) {
  auto j = Json::array();
  for (const auto& row : m) j.push_back(Json::array({row[0], row[1], row[2]}));
  return j;
}

Json to_json(const Advisory& a) {
  Json j;
  j["kind"] = to_string(a.kind);
  j["tag"] = a.tag;
  j["text"] = a.text;
  j["source"] = a.source;
  j["line"] = std::string(to_string(a.kind)) + ": " + a.text;
  return j;
}

Json to_json(const QuotientReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["n_prime"] = r.n_prime;
  j["solvable"] = r.solvable;
  j["transitive"] = r.transitive;
  j["genus"] = r.genus;
  j["is_general_type"] = r.is_general_type;
  j["threshold_genus"] = r.threshold_genus;
  j["order"] = r.order;
  auto adv = Json::array();
  for (const auto& a : r.advisories) adv.push_back(to_json(a));
  j["advisories"] = adv;
  return j;
}

Json to_json(const CoverData& c) {
  Json j;
  j["degree"] = c.degree;
  j["genus_source"] = c.genus_source;
  j["genus_base"] = c.genus_base;
  j["ramification_degree"] = c.ramification_degree;
  j["valid"] = validate_cover(c);
  return j;
}

Json to_json(const PrimePattern& p) {
  Json j;
  j["prime"] = p.prime;
  if (p.skipped)
    j["skipped"] = true;
  else
    j["degrees"] = p.degrees;
  return j;
}

Json to_json(const IrreducibilityVerdict& v) {
  Json j;
  j["verdict"] = v.irreducible ? "Irreducible" : "Inconclusive";
  if (v.irreducible) j["witness"] = v.witness;
  auto pats = Json::array();
  for (const auto& p : v.patterns) pats.push_back(to_json(p));
  j["patterns"] = pats;
  return j;
}

Json to_json(const DistinctnessVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["prime"] = v.prime;
  j["extension_degree"] = v.ext_degree;
  j["flex_count"] = v.flex_count;
  j["hyperflex_count"] = v.hyperflex_count;
  j["distinct_residual_count"] = v.distinct_residual_count;
  if (!v.reason.empty()) j["reason"] = "inconclusive mod p: " + v.reason;
  return j;
}

Json to_json(const ExtField& field, const ExtField::Elem& a) {
  if (field.in_prime_field(a)) return a[0];
  return a;
}

Json to_json(const ExtField& field, const Point3<ExtField>& p) {
  return Json::array({to_json(field, p[0]), to_json(field, p[1]), to_json(field, p[2])});
}

Json to_json(const FlexReport& r) {
  Json j;
  j["coordinate_change"] = matrix_to_json(r.form.change);
  j["flex_form"] = zpoly_to_json(r.form.form);
  j["degree"] = r.form.form.degree();
  j["squarefree_degree"] = r.form.squarefree.degree();
  auto pats = Json::array();
  for (const auto& p : r.patterns) pats.push_back(to_json(p));
  j["patterns"] = pats;
  j["flex_irreducibility"] = to_json(r.flex_irreducibility);
  if (r.flexes) {
    const auto& set = *r.flexes;
    j["prime"] = set.prime;
    j["extension_degree"] = set.field.extension_degree();
    j["modulus"] = set.field.modulus();
    auto flexes = Json::array();
    for (std::size_t i = 0; i < set.flexes.size(); ++i) {
      const auto& f = set.flexes[i];
      Json fj;
      fj["point"] = to_json(set.field, f.point);
      fj["multiplicity"] = f.multiplicity;
      fj["contact"] = f.contact;
      if (i < r.residuals.size()) fj["residual"] = to_json(set.field, r.residuals[i]);
      flexes.push_back(fj);
    }
    j["flexes"] = flexes;
    j["flex_count"] = set.flexes.size();
    j["multiplicity_total"] = set.total_multiplicity();
    j["hyperflex_count"] = set.hyperflex_count();
  }
  if (r.distinct_residuals) j["distinct_residuals"] = to_json(*r.distinct_residuals);
  return j;
}

Json to_json(const EliminantReport& r, const std::vector<RootCheck>& checks) {
  Json j;
  j["coordinate_change"] = matrix_to_json(r.form.change);
  j["eliminant"] = zpoly_to_json(r.eliminant);
  j["degree"] = r.eliminant.degree();
  j["flex_form_squarefree_degree"] = r.form.squarefree.degree();
  j["gcd_degree_with_flex_form"] = r.gcd_degree_with_flex_form;
  j["squarefree"] = r.squarefree;
  auto pats = Json::array();
  for (const auto& p : r.patterns) pats.push_back(to_json(p));
  j["patterns"] = pats;
  if (r.irreducibility) j["irreducibility"] = to_json(*r.irreducibility);
  if (!r.note.empty()) j["note"] = r.note;
  auto cj = Json::array();
  for (const auto& c : checks) {
    Json x;
    x["prime"] = c.prime;
    x["applicable"] = c.applicable;
    if (c.applicable) {
      x["extension_degree"] = c.ext_degree;
      x["matched"] = c.matched;
    }
    if (!c.reason.empty()) x["reason"] = c.reason;
    cj.push_back(x);
  }
  j["root_checks"] = cj;
  return j;
}

Json error_json(const Error& e) {
  Json inner;
  inner["code"] = static_cast<int>(e.code());
  inner["kind"] = e.tag();
  inner["message"] = e.what();
  Json j;
  j["error"] = inner;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
}

}  // namespace gql
