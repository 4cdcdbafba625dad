#ifndef GRIDROOTS_IO_JSON_HPP
#define GRIDROOTS_IO_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gridroots/codes.hpp"
#include "gridroots/poly.hpp"

namespace gridroots {

using Json = nlohmann::json;

// Strict shape checks; unknown keys are rejected so typos cannot silently
// change a problem. All failures carry the code "SchemaError".
void require_object(const Json& j, const std::string& where);
void require_keys(const Json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where);

// Monomials travel as exponent arrays ([3,1]) or text ("X1^3*X2").
Monomial monomial_from_json(const Json& j, int dim_hint = -1);
Json monomial_to_json(const Monomial& m);
std::vector<Monomial> monomials_from_json(const Json& j, int dim_hint = -1);

// Elements as canonical strings; plain integers are accepted on input.
FieldElem elem_from_json(const Field& f, const Json& j);
Json elem_to_json(const FieldElem& e);

// {"dim": m} full field grid, {"sizes": [...]} prefix grid, or
// {"sets": [[...], ...]} explicit coordinate sets.
CartesianGrid grid_from_json(const Field& f, const Json& j);

PointSet points_from_json(const Field& f, int m, const Json& j);
Json points_to_json(const PointSet& a);

// {"terms": [{"exp": [3,1], "coef": "x^2+1"}]} or a plain text form.
Polynomial polynomial_from_json(const Field& f, int m, const Json& j);
Json polynomial_to_json(const Polynomial& p);

// {"n": ..., "field": ..., "rows": [[...], ...]}; the field key is
// optional on input but must agree with the ambient field.
LinearCode code_from_json(const Field& f, const Json& j);
Json code_to_json(const LinearCode& c);

// Sorted 1-based position arrays externally, 0-based internally.
IndexSet index_set_from_json(std::size_t n, const Json& j);
Json index_set_to_json(const IndexSet& a);

}  // namespace gridroots

#endif
