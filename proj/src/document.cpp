#include "acb/document.hpp"

#include "acb/errors.hpp"
#include "acb/expression.hpp"

#include <map>
#include <set>

namespace acb {

using nlohmann::json;
using nlohmann::ordered_json;

InvalidManifold::InvalidManifold(ValidationReport report)
    : StructuralError("manifold failed validation (" + std::to_string(report.issues.size()) + " issue"
                      + (report.issues.size() == 1 ? "" : "s") + ")")
    , report_(std::move(report))
{
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what)
{
    throw ParseError("field '" + field + "': " + what);
}

const json& require(const json& doc, const std::string& key)
{
    if (!doc.contains(key))
        field_error(key, "missing");
    return doc.at(key);
}

Scalar entry(const json& value, const std::string& field, const ParameterSet& params)
{
    if (value.is_number_integer())
        return Scalar(Polynomial(params, Rational(value.get<long>())));
    if (!value.is_string())
        field_error(field, "expected an expression string or an integer");
    try {
        return parse_expression(value.get<std::string>(), params);
    } catch (const ParseError& e) {
        field_error(field, e.what());
    }
}

Vec vector_field(const json& value, const std::string& field, std::size_t dim, const ParameterSet& params)
{
    if (!value.is_array() || value.size() != dim)
        field_error(field, "expected an array of " + std::to_string(dim) + " entries");
    Vec out;
    for (std::size_t i = 0; i < dim; ++i)
        out.push_back(entry(value[i], field + "[" + std::to_string(i) + "]", params));
    return out;
}

Matrix square_field(const json& value, const std::string& field, std::size_t dim, const ParameterSet& params)
{
    if (!value.is_array() || value.size() != dim)
        field_error(field, "expected " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = value[r];
        if (!row.is_array() || row.size() != dim)
            field_error(field + "[" + std::to_string(r) + "]", "expected " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c)
            m(r, c) = entry(row[c], field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]", params);
    }
    return m;
}

Matrix metric_field(const json& value, std::size_t dim, const ParameterSet& params)
{
    if (!value.is_array() || value.size() != dim)
        field_error("metric", "expected " + std::to_string(dim) + " rows");
    const bool upper = !value[0].is_array() || value[0].size() != dim ? false : dim > 1 && value[1].is_array()
            && value[1].size() == dim - 1;
    if (!upper)
        return square_field(value, "metric", dim, params);
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        const json& row = value[r];
        const std::string f = "metric[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != dim - r)
            field_error(f, "upper-triangular row must have " + std::to_string(dim - r) + " entries");
        for (std::size_t c = r; c < dim; ++c) {
            m(r, c) = entry(row[c - r], f + "[" + std::to_string(c - r) + "]", params);
            m(c, r) = m(r, c);
        }
    }
    return m;
}

std::size_t index_field(const json& value, const std::string& field, std::size_t dim)
{
    if (!value.is_number_integer() || value.get<long>() < 0 || value.get<std::size_t>() >= dim)
        field_error(field, "expected an index in [0, " + std::to_string(dim) + ")");
    return value.get<std::size_t>();
}

} // namespace

Manifold parse_document(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ParseError("document must be a JSON object");

    const json& dim_field = require(doc, "dim");
    if (!dim_field.is_number_integer() || dim_field.get<long>() < 1)
        field_error("dim", "expected a positive integer");
    const auto dim = dim_field.get<std::size_t>();

    std::vector<std::string> names;
    if (doc.contains("params")) {
        const json& ps = doc.at("params");
        if (!ps.is_array())
            field_error("params", "expected an array of names");
        for (const auto& p : ps) {
            if (!p.is_string())
                field_error("params", "expected an array of names");
            const auto name = p.get<std::string>();
            const bool valid = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]))
                && std::all_of(name.begin(), name.end(),
                               [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
            if (!valid)
                field_error("params", "invalid parameter name '" + name + "'");
            if (std::find(names.begin(), names.end(), name) != names.end())
                field_error("params", "duplicate parameter name '" + name + "'");
            names.push_back(name);
        }
    }

    Manifold m;
    m.params = ParameterSet(std::move(names));
    m.algebra = LieAlgebra(dim, m.params);

    std::set<std::pair<std::size_t, std::size_t>> given;
    if (doc.contains("brackets")) {
        const json& brackets = doc.at("brackets");
        if (!brackets.is_array())
            field_error("brackets", "expected an array");
        for (std::size_t n = 0; n < brackets.size(); ++n) {
            const std::string f = "brackets[" + std::to_string(n) + "]";
            const json& b = brackets[n];
            if (!b.is_object())
                field_error(f, "expected an object with i, j, coefficients");
            const std::size_t i = index_field(require(b, "i"), f + ".i", dim);
            const std::size_t j = index_field(require(b, "j"), f + ".j", dim);
            if (!given.insert({i, j}).second)
                field_error(f, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") listed twice");
            const json& coeffs = require(b, "coefficients");
            if (!coeffs.is_object())
                field_error(f + ".coefficients", "expected an object mapping k to an expression");
            for (const auto& [key, value] : coeffs.items()) {
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoul(key, &used);
                    if (used != key.size())
                        throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    field_error(f + ".coefficients", "key '" + key + "' is not an index");
                }
                if (k >= dim)
                    field_error(f + ".coefficients", "index " + key + " out of range");
                m.algebra.structure(i, j, k) = entry(value, f + ".coefficients." + key, m.params);
            }
        }
    }
    for (const auto& [i, j] : given)
        if (i != j && !given.contains({j, i}))
            for (std::size_t k = 0; k < dim; ++k)
                m.algebra.structure(j, i, k) = -m.algebra.structure(i, j, k);

    auto& s = m.structure;
    s.g = metric_field(require(doc, "metric"), dim, m.params);
    s.phi = square_field(require(doc, "phi"), "phi", dim, m.params);
    s.xi = vector_field(require(doc, "xi"), "xi", dim, m.params);
    if (doc.contains("eta") && !doc.at("eta").is_null())
        s.eta = vector_field(doc.at("eta"), "eta", dim, m.params);
    else
        s.eta = lower_xi(s);
    return m;
}

Manifold parse_manifold(std::string_view text)
{
    Manifold m = parse_document(text);
    ValidationReport report = validate_manifold(m);
    if (!report.ok())
        throw InvalidManifold(std::move(report));
    return m;
}

ordered_json to_document(const Manifold& m)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    ordered_json doc;
    doc["dim"] = d;
    doc["params"] = m.params.names();
    ordered_json brackets = ordered_json::array();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            ordered_json coeffs = ordered_json::object();
            for (std::size_t k = 0; k < d; ++k)
                if (!m.algebra.structure(i, j, k).is_zero())
                    coeffs[std::to_string(k)] = m.algebra.structure(i, j, k).to_string();
            if (!coeffs.empty())
                brackets.push_back({{"i", i}, {"j", j}, {"coefficients", coeffs}});
        }
    doc["brackets"] = brackets;
    const auto matrix = [d](const Matrix& x) {
        ordered_json rows = ordered_json::array();
        for (std::size_t r = 0; r < d; ++r) {
            ordered_json row = ordered_json::array();
            for (std::size_t c = 0; c < d; ++c)
                row.push_back(x(r, c).to_string());
            rows.push_back(row);
        }
        return rows;
    };
    const auto vector = [](const Vec& v) {
        ordered_json out = ordered_json::array();
        for (const auto& x : v)
            out.push_back(x.to_string());
        return out;
    };
    doc["metric"] = matrix(s.g);
    doc["phi"] = matrix(s.phi);
    doc["xi"] = vector(s.xi);
    doc["eta"] = vector(s.eta);
    return doc;
}

std::string serialize_manifold(const Manifold& m)
{
    return to_document(m).dump(2) + "\n";
}

} // namespace acb
