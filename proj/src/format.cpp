#include "hh1/format.hpp"

#include <cstdlib>

namespace hh1::format {

namespace {

fp::Vec parse_vec(const json& j, std::size_t expect, const char* what) {
    if (!j.is_array() || j.size() != expect)
        throw input_error(std::string(what) + ": expected an array of length " +
                          std::to_string(expect));
    fp::Vec v;
    for (const auto& x : j) {
        if (!x.is_number_unsigned())
            throw input_error(std::string(what) + ": entries must be non-negative integers");
        v.push_back(x.get<uint32_t>());
    }
    return v;
}

}  // namespace

std::size_t effective_dim_cap() {
    const char* env = std::getenv("HH1_MAX_DIM");
    if (!env) return algebra::kHardDimCap;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw input_error("HH1_MAX_DIM must be a positive integer");
    return std::min<std::size_t>(v, algebra::kHardDimCap);
}

algebra::Algebra parse_algebra_spec(const json& spec, std::size_t dim_cap) {
    if (!spec.is_object()) throw input_error("algebra spec must be a JSON object");
    if (!spec.contains("p") || !spec["p"].is_number_unsigned())
        throw input_error("algebra spec: missing or invalid field 'p'");
    uint32_t p = spec["p"].get<uint32_t>();
    if (!spec.contains("table")) throw input_error("algebra spec: missing field 'table'");
    const json& table = spec["table"];

    std::vector<std::string> labels;
    if (spec.contains("labels")) {
        if (!spec["labels"].is_array()) throw input_error("algebra spec: 'labels' must be an array");
        for (const auto& l : spec["labels"]) labels.push_back(l.get<std::string>());
    }

    if (table.is_array()) {
        // explicit structure constants
        std::size_t dim = table.size();
        if (dim == 0) throw input_error("structure_constants: empty table");
        fp::Vec flat(dim * dim * dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!table[i].is_array() || table[i].size() != dim)
                throw input_error("structure_constants: table must be dim x dim");
            for (std::size_t j = 0; j < dim; ++j) {
                fp::Vec cij = parse_vec(table[i][j], dim, "structure_constants entry");
                for (std::size_t k = 0; k < dim; ++k) flat[(i * dim + j) * dim + k] = cij[k];
            }
        }
        if (!spec.contains("unit"))
            throw input_error("algebra spec: 'unit' is required with explicit structure constants");
        fp::Vec unit = parse_vec(spec["unit"], dim, "unit");
        if (labels.empty())
            for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
        return algebra::Algebra(p, dim, std::move(labels), std::move(flat), std::move(unit), dim_cap);
    }

    if (!table.is_object()) throw input_error("algebra spec: 'table' must be an array or object");

    if (table.contains("group_cayley")) {
        const json& c = table["group_cayley"];
        if (!c.is_array()) throw input_error("group_cayley must be an array of rows");
        std::vector<std::vector<std::size_t>> cayley;
        for (const auto& row : c) {
            std::vector<std::size_t> r;
            for (const auto& x : row) r.push_back(x.get<std::size_t>());
            cayley.push_back(std::move(r));
        }
        return algebra::group_algebra(cayley, std::move(labels), p, dim_cap);
    }
    if (table.contains("truncated_poly")) {
        std::size_t n = table["truncated_poly"].get<std::size_t>();
        return algebra::truncated_poly(p, n, dim_cap);
    }
    if (table.contains("matrix_over")) {
        if (!table.contains("m")) throw input_error("matrix_over constructor requires field 'm'");
        json nested = table["matrix_over"];
        if (nested.is_object() && !nested.contains("p")) nested["p"] = p;
        algebra::Algebra inner = parse_algebra_spec(nested, dim_cap);
        if (inner.modulus() != p) throw input_error("matrix_over: nested modulus differs");
        return algebra::matrix_algebra(inner, table["m"].get<std::size_t>(), dim_cap);
    }
    throw input_error("algebra spec: unknown table constructor");
}

algebra::Algebra parse_algebra_text(const std::string& text, std::size_t dim_cap) {
    json spec;
    try {
        spec = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse failure: ") + e.what());
    }
    return parse_algebra_spec(spec, dim_cap);
}

fp::Matrix parse_endo_text(const std::string& text, std::size_t dim, uint32_t p) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("JSON parse failure: ") + e.what());
    }
    const json& rows = j.is_object() && j.contains("matrix") ? j["matrix"] : j;
    if (!rows.is_array() || rows.size() != dim)
        throw input_error("derivation matrix must have " + std::to_string(dim) + " rows");
    fp::Matrix m(dim, dim, p);
    for (std::size_t r = 0; r < dim; ++r) {
        fp::Vec row = parse_vec(rows[r], dim, "derivation matrix row");
        for (std::size_t c = 0; c < dim; ++c) m.set(r, c, row[c]);
    }
    return m;
}

std::string digest_hex(std::string_view content) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : content) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json vec_json(const fp::Vec& v) {
    json a = json::array();
    for (uint32_t x : v) a.push_back(x);
    return a;
}

json matrix_json(const fp::Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
    return rows;
}

json make_report(const std::string& command, const std::string& input_digest, json payload,
                 std::vector<std::string> warnings) {
    json rep;
    rep["command"] = command;
    rep["input_digest"] = input_digest;
    rep["payload"] = std::move(payload);
    rep["warnings"] = warnings;
    return rep;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace hh1::format
