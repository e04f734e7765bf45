#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh1/algebra.hpp"
#include "hh1/builtins.hpp"

using namespace hh1;
using algebra::Algebra;
using fp::Vec;

namespace {

Algebra m2_f3() { return algebra::matrix_algebra(algebra::truncated_poly(3, 1), 2); }

}  // namespace

TEST_CASE("structure constants, multiply, unit") {
    Algebra a = algebra::truncated_poly(5, 3);  // F_5[x]/x^3
    CHECK(a.dim() == 3);
    CHECK(a.unit() == Vec{1, 0, 0});
    CHECK(a.product_of_basis(1, 1) == Vec{0, 0, 1});   // x*x = x^2
    CHECK(a.product_of_basis(2, 2) == Vec{0, 0, 0});   // x^4 = 0
    // (1+x)(1+x) = 1 + 2x + x^2
    CHECK(a.multiply({1, 1, 0}, {1, 1, 0}) == Vec{1, 2, 1});
    CHECK(a.multiply(a.unit(), {3, 1, 4}) == Vec{3, 1, 4});
    CHECK(fp::vec_is_zero(a.commutator({1, 2, 3}, {4, 0, 1})));  // commutative
    CHECK(algebra::validate(a).empty());
}

TEST_CASE("validate names the failing axiom on a corrupted table") {
    // e1*e0 = e0 breaks the unit law, and (e1 e0) e1 = e1 vs e1 (e0 e1) = 0
    // breaks associativity
    fp::Vec table(8, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { table[(i * 2 + j) * 2 + k] = 1; };
    set(0, 0, 0);
    set(0, 1, 1);
    set(1, 0, 0);
    // e1*e1 = 0
    Algebra bad(3, 2, {"e0", "e1"}, table, {1, 0});
    auto violations = algebra::validate(bad);
    REQUIRE(!violations.empty());
    bool saw_assoc = false, saw_unit = false;
    for (const auto& v : violations) {
        CHECK((v.kind == "associativity" || v.kind == "unit"));
        CHECK(!v.describe().empty());
        saw_assoc |= v.kind == "associativity";
        saw_unit |= v.kind == "unit";
    }
    CHECK(saw_assoc);
    CHECK(saw_unit);
}

TEST_CASE("group_algebra rejects non-groups and names the axiom") {
    // a Latin square with no two-sided identity
    std::vector<std::vector<std::size_t>> no_id = {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    CHECK_THROWS_WITH_AS(algebra::group_algebra(no_id, {}, 3), doctest::Contains("identity"),
                         input_error);
    // identity may sit at any index
    CHECK_NOTHROW(algebra::group_algebra({{1, 0}, {0, 1}}, {}, 3));
    // not associative: a quasigroup table (order 5, i*j = 2i+j mod 5 has no associativity)
    std::vector<std::vector<std::size_t>> nonassoc(5, std::vector<std::size_t>(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) nonassoc[i][j] = (2 * i + j) % 5;
    CHECK_THROWS_AS(algebra::group_algebra(nonassoc, {}, 3), input_error);
    // malformed: row with out-of-range entry
    std::vector<std::vector<std::size_t>> bad_entry = {{0, 1}, {1, 7}};
    CHECK_THROWS_AS(algebra::group_algebra(bad_entry, {}, 3), input_error);
    // non-bijective row (not a Latin square)
    std::vector<std::vector<std::size_t>> not_latin = {{0, 0}, {1, 0}};
    CHECK_THROWS_AS(algebra::group_algebra(not_latin, {}, 3), input_error);
}

TEST_CASE("builtin S_3 composes right-to-left") {
    auto c = builtins::s3_cayley();
    // basis: 0=1, 1=(123), 2=(132), 3=(12), 4=(13), 5=(23)
    CHECK(c[3][1] == 5);  // (12)(123) = (23)
    CHECK(c[3][2] == 4);  // (12)(132) = (13)
    CHECK(c[1][2] == 0);
    CHECK(c[1][1] == 2);
    CHECK_NOTHROW(algebra::group_algebra(c, {}, 3));
}

TEST_CASE("center of M_2(F_3) is the scalars") {
    auto z = algebra::center(m2_f3());
    REQUIRE(z.size() == 1);
    // E00 + E11 in (s,t,i)-order with inner dim 1: indices 0 and 3
    CHECK(z[0] == Vec{1, 0, 0, 1});
}

TEST_CASE("center of F_3 S_3 is spanned by class sums") {
    Algebra a = builtins::builtin_algebra("s3", 3);
    auto z = algebra::center(a);
    REQUIRE(z.size() == 3);
    for (const Vec& v : z)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec e(a.dim(), 0);
            e[i] = 1;
            CHECK(fp::vec_is_zero(a.commutator(v, e)));
        }
    // the conjugacy class sums are central
    Vec identity = {1, 0, 0, 0, 0, 0};
    Vec threes = {0, 1, 1, 0, 0, 0};
    Vec twos = {0, 0, 0, 1, 1, 1};
    for (const Vec& v : {identity, threes, twos})
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Vec e(a.dim(), 0);
            e[i] = 1;
            CHECK(fp::vec_is_zero(a.commutator(v, e)));
        }
}

TEST_CASE("matrix_algebra shape and center preservation") {
    Algebra base = algebra::truncated_poly(3, 3);
    Algebra mat = algebra::matrix_algebra(base, 2);
    CHECK(mat.dim() == 12);
    CHECK(algebra::validate(mat).empty());
    // Z(M_m(A)) = Z(A) embedded diagonally: dimensions match
    CHECK(algebra::center(mat).size() == algebra::center(base).size());
    // unit is sum of diagonal E_ss (x) 1
    Vec u(12, 0);
    u[(0 * 2 + 0) * 3 + 0] = 1;
    u[(1 * 2 + 1) * 3 + 0] = 1;
    CHECK(mat.unit() == u);
}

TEST_CASE("group-algebra basis helpers") {
    Algebra s3 = builtins::builtin_algebra("s3", 3);
    CHECK(algebra::is_group_algebra_basis(s3));
    CHECK(algebra::basis_identity_index(s3) == 0);
    CHECK(algebra::basis_inverse_index(s3, 1) == 2);  // (123)^-1 = (132)
    CHECK(algebra::basis_inverse_index(s3, 3) == 3);  // transpositions are involutions
    CHECK(algebra::basis_product_index(s3, 3, 1) == 5);
    CHECK(!algebra::is_group_algebra_basis(m2_f3()));  // E01*E10 = E00 but E01*E01 = 0
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(algebra::truncated_poly(3, 65), input_error);
    CHECK_THROWS_AS(algebra::matrix_algebra(algebra::truncated_poly(3, 5), 4), input_error);
    CHECK_THROWS_AS(algebra::truncated_poly(3, 4, 3), input_error);  // explicit lower cap
    CHECK_NOTHROW(algebra::truncated_poly(3, 64));
}

TEST_CASE("format_element") {
    Algebra a = builtins::builtin_algebra("c3", 3);
    CHECK(a.format_element({1, 2, 0}) == "1 + 2*(123)");
    CHECK(a.format_element({0, 0, 0}) == "0");
}
