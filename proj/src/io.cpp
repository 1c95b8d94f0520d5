#include "tp3/io.hpp"

#include <json.hpp>

#include <set>

#include "tp3/errors.hpp"

namespace tp3 {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(where, e.what());
    }
}

int int_field(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

Vector value_field(const json& j, int dim, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object of component coefficients");
    Vector v(static_cast<std::size_t>(dim));
    for (const auto& [key, val] : j.items()) {
        int s = 0;
        try {
            std::size_t pos = 0;
            s = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            fail(where, "component key \"" + key + "\" is not an index");
        }
        if (s < 1 || s > dim) fail(where + "." + key, "component index out of range 1.." + std::to_string(dim));
        v[s - 1] = rational_field(val, where + "." + key);
    }
    return v;
}

template <std::size_t N>
std::array<int, N> args_field(const json& j, int dim, bool strict, const std::string& where) {
    if (!j.is_array() || j.size() != N) fail(where, "expected " + std::to_string(N) + " indices");
    std::array<int, N> a{};
    for (std::size_t i = 0; i < N; ++i) {
        a[i] = int_field(j[i], where + "[" + std::to_string(i) + "]");
        if (a[i] < 1 || a[i] > dim) fail(where + "[" + std::to_string(i) + "]", "index out of range 1.." + std::to_string(dim));
        if (i > 0 && (strict ? a[i] <= a[i - 1] : a[i] < a[i - 1]))
            fail(where, strict ? "non-monotone args (must be strictly increasing)" : "non-monotone args (must be non-decreasing)");
    }
    return a;
}

json value_json(const Vector& v) {
    json o = json::object();
    for (std::size_t s = 0; s < v.size(); ++s)
        if (!v[s].is_zero()) o[std::to_string(s + 1)] = v[s].str();
    return o;
}

}  // namespace

Document parse_document(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object()) fail("document", "expected a JSON object");
    for (const auto& [key, val] : j.items())
        if (key != "dim" && key != "bracket" && key != "product" && key != "meta") fail(key, "unknown field");
    if (!j.contains("dim")) fail("dim", "missing");
    const int dim = int_field(j["dim"], "dim");
    if (dim < 1) fail("dim", "must be positive");
    if (!j.contains("bracket") || !j["bracket"].is_array()) fail("bracket", "missing or not a list");

    Document doc{TriBracket(dim), std::nullopt, {}};
    std::set<std::array<int, 3>> seen3;
    for (std::size_t e = 0; e < j["bracket"].size(); ++e) {
        const std::string where = "bracket[" + std::to_string(e) + "]";
        const json& entry = j["bracket"][e];
        if (!entry.is_object() || !entry.contains("args") || !entry.contains("value"))
            fail(where, "expected {\"args\": [...], \"value\": {...}}");
        auto a = args_field<3>(entry["args"], dim, true, where + ".args");
        if (!seen3.insert(a).second) fail(where + ".args", "duplicate args");
        doc.bracket.set(a[0], a[1], a[2], value_field(entry["value"], dim, where + ".value"));
    }
    if (j.contains("product")) {
        if (!j["product"].is_array()) fail("product", "expected a list");
        CommProduct p(dim);
        std::set<std::array<int, 2>> seen2;
        for (std::size_t e = 0; e < j["product"].size(); ++e) {
            const std::string where = "product[" + std::to_string(e) + "]";
            const json& entry = j["product"][e];
            if (!entry.is_object() || !entry.contains("args") || !entry.contains("value"))
                fail(where, "expected {\"args\": [...], \"value\": {...}}");
            auto a = args_field<2>(entry["args"], dim, false, where + ".args");
            if (!seen2.insert(a).second) fail(where + ".args", "duplicate args");
            p.set(a[0], a[1], value_field(entry["value"], dim, where + ".value"));
        }
        doc.product = std::move(p);
    }
    if (j.contains("meta")) {
        if (!j["meta"].is_object()) fail("meta", "expected an object of strings");
        for (const auto& [key, val] : j["meta"].items()) {
            if (!val.is_string()) fail("meta." + key, "expected a string");
            doc.meta[key] = val.get<std::string>();
        }
    }
    return doc;
}

std::string serialize_document(const Document& doc) {
    json j;
    j["dim"] = doc.bracket.dim();
    j["bracket"] = json::array();
    for (const auto& [key, val] : doc.bracket.table())
        j["bracket"].push_back({{"args", {key[0], key[1], key[2]}}, {"value", value_json(val)}});
    if (doc.product) {
        j["product"] = json::array();
        for (const auto& [key, val] : doc.product->table())
            j["product"].push_back({{"args", {key[0], key[1]}}, {"value", value_json(val)}});
    }
    if (!doc.meta.empty()) j["meta"] = doc.meta;
    return j.dump();
}

std::string serialize_document(const TriBracket& b, const std::optional<CommProduct>& p) {
    return serialize_document(Document{b, p, {}});
}

Matrix parse_matrix(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_array() || j.empty()) fail("matrix", "expected a non-empty list of rows");
    const std::size_t n = j.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string where = "matrix[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != n) fail(where, "expected " + std::to_string(n) + " entries (square matrix)");
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = rational_field(j[r][c], where + "[" + std::to_string(c) + "]");
    }
    return m;
}

namespace {

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::string serialize_matrix(const Matrix& m) { return matrix_json(m).dump(); }

std::string serialize_certificate(const Certificate& c) {
    json j;
    j["family"] = c.family.name();
    j["params"] = json::object();
    for (const auto& [k, v] : c.family.params) j["params"][k] = v.str();
    j["witness"] = matrix_json(c.witness);
    return j.dump();
}

}  // namespace tp3
