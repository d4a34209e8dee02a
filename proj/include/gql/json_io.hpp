#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gql/classifier.hpp"
#include "gql/error.hpp"
#include "gql/quartic.hpp"
#include "gql/riemann_hurwitz.hpp"

namespace gql {

using Json = nlohmann::ordered_json;

/// {"degree": n, "generators": ["(1 2 3)", ...]}. Throws ParseError.
PermGroup group_from_json(const Json& j);
Json group_to_json(const PermGroup& g);

/// A JSON group object, or a cycle list such as "(1 2 3 4),(1 3)". Without
/// an explicit degree a cycle list takes the largest point mentioned.
PermGroup parse_group_spec(const std::string& text, std::optional<int> degree = std::nullopt);

/// {"degree": 4, "terms": [[[a, b, c], "coeff"], ...]} with rational
/// coefficients; denominators are cleared. Throws ParseError for malformed
/// input and DomainError when the form is not homogeneous of that degree.
PlaneCurve curve_from_json(const Json& j);
Json curve_to_json(const PlaneCurve& c);
Json multipoly_to_json(const MultiPoly& f);

Json zpoly_to_json(const ZPoly& f);
Json matrix_to_json(const IntMatrix3& m);

Json to_json(const Advisory& a);
Json to_json(const QuotientReport& r);
Json to_json(const CoverData& c);
Json to_json(const PrimePattern& p);
Json to_json(const IrreducibilityVerdict& v);
Json to_json(const DistinctnessVerdict& v);
Json to_json(const FlexReport& r);
Json to_json(const EliminantReport& r, const std::vector<RootCheck>& checks);

/// Field element of F_{p^k}: an integer for prime-field elements, otherwise
/// the coefficient list in the generator, ascending.
Json to_json(const ExtField& field, const ExtField::Elem& a);
Json to_json(const ExtField& field, const Point3<ExtField>& p);

/// {"error": {"code": 3, "kind": "precondition_failed", "message": ...}}
Json error_json(const Error& e);

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace gql
