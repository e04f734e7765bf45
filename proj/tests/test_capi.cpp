#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "hh1.h"

using nlohmann::json;

namespace {

json run(hh1_status (*cmd)(const hh1_algebra*, char**), const hh1_algebra* a) {
    char* out = nullptr;
    REQUIRE(cmd(a, &out) == HH1_OK);
    REQUIRE(out != nullptr);
    json j = json::parse(out);
    hh1_string_free(out);
    return j;
}

struct Handle {
    hh1_algebra* a = nullptr;
    ~Handle() { hh1_algebra_free(a); }
};

}  // namespace

TEST_CASE("builtin handles and accessors") {
    Handle h;
    REQUIRE(hh1_algebra_builtin("c3", 3, &h.a) == HH1_OK);
    CHECK(hh1_algebra_dim(h.a) == 3);
    CHECK(hh1_algebra_modulus(h.a) == 3);

    hh1_algebra* bad = nullptr;
    CHECK(hh1_algebra_builtin("q8", 3, &bad) == HH1_ERR_INPUT);
    CHECK(bad == nullptr);
    CHECK(std::string(hh1_last_error()).find("q8") != std::string::npos);
    CHECK(hh1_algebra_builtin("c3", 4, &bad) == HH1_ERR_INPUT);  // non-prime
}

TEST_CASE("parse: explicit table, constructors, failure modes") {
    Handle h;
    const char* tp = R"({"p": 3, "table": {"truncated_poly": 4}})";
    REQUIRE(hh1_algebra_parse(tp, &h.a) == HH1_OK);
    CHECK(hh1_algebra_dim(h.a) == 4);

    Handle g;
    const char* cay = R"({"p": 2, "labels": ["1", "g"], "table": {"group_cayley": [[0,1],[1,0]]}})";
    REQUIRE(hh1_algebra_parse(cay, &g.a) == HH1_OK);
    CHECK(hh1_algebra_dim(g.a) == 2);

    Handle m;
    const char* mat = R"({"p": 3, "table": {"matrix_over": {"p": 3, "table": {"truncated_poly": 2}}, "m": 2}})";
    REQUIRE(hh1_algebra_parse(mat, &m.a) == HH1_OK);
    CHECK(hh1_algebra_dim(m.a) == 8);

    hh1_algebra* bad = nullptr;
    CHECK(hh1_algebra_parse("{not json", &bad) == HH1_ERR_INPUT);
    CHECK(hh1_algebra_parse(R"({"p": 3})", &bad) == HH1_ERR_INPUT);
    // explicit table must come with a unit
    const char* no_unit = R"({"p": 2, "table": [[[1,0],[0,1]],[[0,1],[0,0]]]})";
    CHECK(hh1_algebra_parse(no_unit, &bad) == HH1_ERR_INPUT);
    CHECK(bad == nullptr);
}

TEST_CASE("reports are deterministic and carry the digest") {
    Handle h;
    REQUIRE(hh1_algebra_builtin("c3", 3, &h.a) == HH1_OK);
    char *first = nullptr, *second = nullptr;
    REQUIRE(hh1_cmd_hh1(h.a, &first) == HH1_OK);
    REQUIRE(hh1_cmd_hh1(h.a, &second) == HH1_OK);
    CHECK(std::strcmp(first, second) == 0);  // byte-identical
    json j = json::parse(first);
    CHECK(j["command"] == "hh1");
    CHECK(j["input_digest"].get<std::string>().size() == 16);
    CHECK(j["payload"]["hh1_dim"] == 3);
    CHECK(j["payload"]["inn_dim"] == 0);
    hh1_string_free(first);
    hh1_string_free(second);
}

TEST_CASE("validate and center payloads") {
    Handle h;
    REQUIRE(hh1_algebra_builtin("s3", 3, &h.a) == HH1_OK);
    json v = run(hh1_cmd_validate, h.a);
    CHECK(v["payload"]["valid"] == true);
    json c = run(hh1_cmd_center, h.a);
    CHECK(c["payload"]["dim"] == 3);
}

TEST_CASE("ppower and bracket with named and inline derivations") {
    Handle h;
    REQUIRE(hh1_algebra_builtin("c3", 3, &h.a) == HH1_OK);
    char* out = nullptr;
    REQUIRE(hh1_cmd_ppower(h.a, "f0", &out) == HH1_OK);
    json j = json::parse(out);
    hh1_string_free(out);
    CHECK(j["payload"]["class_is_zero"] == true);

    out = nullptr;
    REQUIRE(hh1_cmd_bracket(h.a, "f0", "f1", &out) == HH1_OK);
    j = json::parse(out);
    hh1_string_free(out);
    CHECK(j["payload"]["class_is_zero"] == false);

    // f0 as an explicit matrix gives the same p-power payload
    out = nullptr;
    REQUIRE(hh1_cmd_ppower(h.a, "[[0,1,0],[0,0,2],[0,0,0]]", &out) == HH1_OK);
    json j2 = json::parse(out);
    hh1_string_free(out);
    CHECK(j2["payload"]["class_is_zero"] == true);

    // named derivations are rejected off the c3 builtin
    Handle s3;
    REQUIRE(hh1_algebra_builtin("s3", 3, &s3.a) == HH1_OK);
    out = nullptr;
    CHECK(hh1_cmd_ppower(s3.a, "f0", &out) == HH1_ERR_INPUT);

    // a non-derivation is a math error
    out = nullptr;
    CHECK(hh1_cmd_ppower(h.a, "[[1,0,0],[0,1,0],[0,0,1]]", &out) == HH1_ERR_MATH);
}

TEST_CASE("integrate and hh1r payloads") {
    Handle h;
    REQUIRE(hh1_algebra_builtin("c3", 3, &h.a) == HH1_OK);
    char* out = nullptr;
    REQUIRE(hh1_cmd_integrate(h.a, "f0", 1, 3, 1000, &out) == HH1_OK);
    json j = json::parse(out);
    hh1_string_free(out);
    CHECK(j["payload"]["status"] == "obstructed");
    CHECK(j["payload"]["obstructed_degree"] == 3);

    out = nullptr;
    REQUIRE(hh1_cmd_hh1r(h.a, 1, 3, 100000, &out) == HH1_OK);
    j = json::parse(out);
    hh1_string_free(out);
    CHECK(j["payload"]["dim"] == 2);
    CHECK(j["payload"]["flag"] == "exact");

    out = nullptr;
    CHECK(hh1_cmd_integrate(h.a, "f0", 4, 3, 1000, &out) == HH1_ERR_INPUT);
}

TEST_CASE("counterexample payload carries the golden values") {
    char* out = nullptr;
    REQUIRE(hh1_cmd_counterexample(&out) == HH1_OK);
    json j = json::parse(out);
    hh1_string_free(out);
    const json& p = j["payload"];
    CHECK(p["tr_f0_at_123"] == json::array({1, 0, 2, 0, 0, 0}));
    CHECK(p["tr_f0_at_132"] == json::array({1, 2, 0, 0, 0, 0}));
    CHECK(p["f0_cubed_is_zero"] == true);
    CHECK(p["tr_of_f0_cubed_is_zero"] == true);
    CHECK(p["ppower_of_tr_f0_at_132"] == json::array({1, 2, 0, 0, 0, 0}));
    CHECK(p["inner_solve_x_132_eq_1"] == "no_solution");
    CHECK(p["verdict"] == "does_not_commute");
    CHECK(p["tr_f0_at_123_specialized"] == p["tr_f0_at_123"]);
    CHECK(j["warnings"].empty());
}

TEST_CASE("morita check payload") {
    Handle h;
    REQUIRE(hh1_algebra_builtin("c3", 3, &h.a) == HH1_OK);
    char* out = nullptr;
    REQUIRE(hh1_cmd_morita_check(h.a, 2, &out) == HH1_OK);
    json j = json::parse(out);
    hh1_string_free(out);
    CHECK(j["payload"]["dims_equal"] == true);
    CHECK(j["payload"]["all_commute"] == true);
}

TEST_CASE("null arguments are input errors, not crashes") {
    CHECK(hh1_algebra_parse(nullptr, nullptr) == HH1_ERR_INPUT);
    Handle h;
    REQUIRE(hh1_algebra_builtin("c3", 3, &h.a) == HH1_OK);
    CHECK(hh1_cmd_ppower(h.a, nullptr, nullptr) == HH1_ERR_INPUT);
    hh1_string_free(nullptr);
    hh1_algebra_free(nullptr);
}
