#ifndef DORTHO_JSON_IO_HPP
#define DORTHO_JSON_IO_HPP

#include <json.hpp>

#include "dortho/diffop.hpp"
#include "dortho/eigenfam.hpp"
#include "dortho/report.hpp"
#include "dortho/seqkit.hpp"

namespace dortho::json {

using Json = nlohmann::ordered_json;

// Rational: "p/q" or "p"; integers are also accepted on input.
Json to_json(const Rational& r);
Rational rational_from(const Json& j);

// Poly: array of rationals, ascending degree; zero is [].
Json to_json(const Poly& p);
Poly poly_from(const Json& j);

// Operator: {"a": [poly, ...]}. DegreeViolation carries the offending index.
Json to_json(const DiffOperator& J);
DiffOperator operator_from(const Json& j);

// {"d": 2, "beta": [...], "alpha": [...], "gamma": [...]} with alpha/gamma
// starting at index 1; general d uses {"d": d, "beta": [...], "gammas": [[...], ...]}.
Json to_json(const RecurrenceTable& rt);
RecurrenceTable table_from(const Json& j);

Json to_json(const MonicSequence& seq);
Json to_json(const ReportEntry& e);
Json to_json(const VerificationReport& r);

}  // namespace dortho::json

#endif
