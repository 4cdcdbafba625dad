#include "gridroots/io_json.hpp"

#include <algorithm>
#include <set>

namespace gridroots {

void require_object(const Json& j, const std::string& where) {
    if (!j.is_object()) fail("SchemaError", where + " must be a JSON object");
}

void require_keys(const Json& j, const std::vector<std::string>& required,
                  const std::vector<std::string>& optional, const std::string& where) {
    require_object(j, where);
    for (const std::string& k : required)
        if (!j.contains(k)) fail("SchemaError", where + " is missing the key \"" + k + "\"");
    for (const auto& [k, v] : j.items()) {
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) fail("SchemaError", where + " has an unknown key \"" + k + "\"");
    }
}

Monomial monomial_from_json(const Json& j, int dim_hint) {
    if (j.is_string()) return Monomial::parse_text(j.get<std::string>(), dim_hint);
    if (j.is_array()) {
        std::vector<int> e;
        for (const Json& v : j) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                fail("SchemaError", "exponents must be nonnegative integers");
            e.push_back(v.get<int>());
        }
        if (dim_hint >= 0) {
            if (static_cast<int>(e.size()) != dim_hint)
                fail("DimensionMismatch", "exponent vector has the wrong length");
        }
        return Monomial(std::move(e));
    }
    fail("SchemaError", "a monomial must be a string or an exponent array");
}

Json monomial_to_json(const Monomial& m) { return Json(m.exps()); }

std::vector<Monomial> monomials_from_json(const Json& j, int dim_hint) {
    if (!j.is_array()) fail("SchemaError", "expected an array of monomials");
    std::vector<Monomial> out;
    int hint = dim_hint;
    for (const Json& v : j) {
        out.push_back(monomial_from_json(v, hint));
        if (hint < 0) hint = out.back().dim();  // later entries must agree
    }
    return out;
}

FieldElem elem_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
    if (j.is_string()) return f.parse_element(j.get<std::string>());
    fail("SchemaError", "a field element must be a string or an integer");
}

Json elem_to_json(const FieldElem& e) { return Json(e.render()); }

CartesianGrid grid_from_json(const Field& f, const Json& j) {
    require_object(j, "grid");
    int forms = static_cast<int>(j.contains("dim")) + static_cast<int>(j.contains("sizes")) +
                static_cast<int>(j.contains("sets"));
    if (forms != 1) fail("SchemaError", "grid needs exactly one of \"dim\", \"sizes\", \"sets\"");
    if (j.contains("dim")) {
        require_keys(j, {"dim"}, {}, "grid");
        if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
            fail("SchemaError", "grid dim must be a positive integer");
        return CartesianGrid::full(f, j["dim"].get<int>());
    }
    if (j.contains("sizes")) {
        require_keys(j, {"sizes"}, {}, "grid");
        if (!j["sizes"].is_array()) fail("SchemaError", "grid sizes must be an array");
        std::vector<int> caps;
        for (const Json& v : j["sizes"]) {
            if (!v.is_number_integer() || v.get<long long>() < 1)
                fail("SchemaError", "grid sizes must be positive integers");
            caps.push_back(v.get<int>());
        }
        return CartesianGrid::prefix(f, caps);
    }
    require_keys(j, {"sets"}, {}, "grid");
    if (!j["sets"].is_array()) fail("SchemaError", "grid sets must be an array of arrays");
    std::vector<std::vector<FieldElem>> sets;
    for (const Json& s : j["sets"]) {
        if (!s.is_array()) fail("SchemaError", "each coordinate set must be an array");
        std::vector<FieldElem> one;
        for (const Json& v : s) one.push_back(elem_from_json(f, v));
        sets.push_back(std::move(one));
    }
    return CartesianGrid(f, std::move(sets));
}

PointSet points_from_json(const Field& f, int m, const Json& j) {
    if (!j.is_array()) fail("SchemaError", "points must be an array of coordinate arrays");
    std::vector<std::vector<FieldElem>> pts;
    for (const Json& p : j) {
        if (!p.is_array() || static_cast<int>(p.size()) != m)
            fail("SchemaError", "each point needs exactly " + std::to_string(m) +
                                    " coordinates");
        std::vector<FieldElem> pt;
        for (const Json& v : p) pt.push_back(elem_from_json(f, v));
        pts.push_back(std::move(pt));
    }
    return PointSet(f, m, std::move(pts));
}

Json points_to_json(const PointSet& a) {
    Json out = Json::array();
    for (const std::vector<FieldElem>& pt : a.points()) {
        Json row = Json::array();
        for (const FieldElem& c : pt) row.push_back(elem_to_json(c));
        out.push_back(std::move(row));
    }
    return out;
}

Polynomial polynomial_from_json(const Field& f, int m, const Json& j) {
    if (j.is_string()) return parse_polynomial(f, m, j.get<std::string>());
    require_keys(j, {"terms"}, {}, "polynomial");
    if (!j["terms"].is_array()) fail("SchemaError", "polynomial terms must be an array");
    Polynomial p(f, m);
    for (const Json& t : j["terms"]) {
        require_keys(t, {"exp", "coef"}, {}, "term");
        Monomial mon = monomial_from_json(t["exp"], m);
        FieldElem c = elem_from_json(f, t["coef"]);
        if (!p.coeff(mon).is_zero()) fail("SchemaError", "duplicate term " + mon.text());
        p.set_coeff(mon, c);
    }
    return p;
}

Json polynomial_to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [mon, coef] : p.terms()) {
        Json t;
        t["exp"] = monomial_to_json(mon);
        t["coef"] = elem_to_json(coef);
        terms.push_back(std::move(t));
    }
    Json out;
    out["terms"] = std::move(terms);
    return out;
}

LinearCode code_from_json(const Field& f, const Json& j) {
    require_keys(j, {"n", "rows"}, {"field"}, "code");
    if (j.contains("field")) {
        Field declared = Field::parse(j["field"].get<std::string>());
        if (declared != f)
            fail("SchemaError", "code field disagrees with the ambient field");
    }
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        fail("SchemaError", "code length must be a nonnegative integer");
    std::size_t n = j["n"].get<std::size_t>();
    if (!j["rows"].is_array()) fail("SchemaError", "code rows must be an array");
    std::vector<std::vector<FieldElem>> rows;
    for (const Json& r : j["rows"]) {
        if (!r.is_array() || r.size() != n)
            fail("SchemaError", "each code row needs exactly n entries");
        std::vector<FieldElem> row;
        for (const Json& v : r) row.push_back(elem_from_json(f, v));
        rows.push_back(std::move(row));
    }
    return LinearCode(f, n, rows);
}

Json code_to_json(const LinearCode& c) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < c.dim(); ++r) {
        Json row = Json::array();
        for (const FieldElem& v : c.basis().row(r)) row.push_back(elem_to_json(v));
        rows.push_back(std::move(row));
    }
    Json out;
    out["n"] = c.length();
    out["field"] = c.field().render();
    out["rows"] = std::move(rows);
    return out;
}

IndexSet index_set_from_json(std::size_t n, const Json& j) {
    if (!j.is_array()) fail("SchemaError", "an index set must be an array");
    IndexSet a;
    for (const Json& v : j) {
        if (!v.is_number_integer() || v.get<long long>() < 1)
            fail("SchemaError", "positions are 1-based positive integers");
        std::size_t pos = v.get<std::size_t>();
        if (pos > n)
            fail("IndexOutOfRange",
                 "position " + std::to_string(pos) + " exceeds the length " + std::to_string(n));
        a.push_back(pos - 1);
    }
    std::set<std::size_t> dedup(a.begin(), a.end());
    if (dedup.size() != a.size()) fail("DuplicateIndex", "a position appears twice");
    return a;
}

Json index_set_to_json(const IndexSet& a) {
    std::vector<std::size_t> sorted(a.begin(), a.end());
    std::sort(sorted.begin(), sorted.end());
    Json out = Json::array();
    for (std::size_t i : sorted) out.push_back(i + 1);
    return out;
}

}  // namespace gridroots
