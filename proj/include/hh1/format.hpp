#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "hh1/algebra.hpp"

// Algebra file format and report serialization helpers. Reports are
// byte-deterministic: nlohmann::json objects keep keys sorted and no
// timestamps are embedded.

namespace hh1::format {

using nlohmann::json;

// Fields: p, labels (optional for constructors), table, unit (omitted for
// constructors). table is a dim x dim array of coefficient vectors, or one
// of the constructor specs {"group_cayley": [[...]]}, {"truncated_poly": n},
// {"matrix_over": <nested spec>, "m": k}.
algebra::Algebra parse_algebra_spec(const json& spec, std::size_t dim_cap);
algebra::Algebra parse_algebra_text(const std::string& text, std::size_t dim_cap);

// A derivation file: either a bare dim x dim array of rows or
// {"matrix": [[...]]}.
fp::Matrix parse_endo_text(const std::string& text, std::size_t dim, uint32_t p);

// FNV-1a 64-bit content hash, hex-encoded.
std::string digest_hex(std::string_view content);

json vec_json(const fp::Vec& v);
json matrix_json(const fp::Matrix& m);

json make_report(const std::string& command, const std::string& input_digest, json payload,
                 std::vector<std::string> warnings = {});
std::string dump_report(const json& report);

// Cap from HH1_MAX_DIM (hard-capped at 64).
std::size_t effective_dim_cap();

}  // namespace hh1::format
