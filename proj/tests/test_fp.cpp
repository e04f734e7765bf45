#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh1/fp.hpp"

using namespace hh1;
using fp::Matrix;
using fp::Vec;

namespace {

Matrix from_rows(const std::vector<Vec>& rows, uint32_t p) {
    return Matrix::from_rows(rows, rows.at(0).size(), p);
}

// every vector of F_p^n, for tiny n
std::vector<Vec> all_vectors(std::size_t n, uint32_t p) {
    std::vector<Vec> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    for (std::size_t code = 0; code < total; ++code) {
        Vec v(n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<uint32_t>(c % p);
            c /= p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, uint32_t p) {
    if (basis.empty()) return fp::vec_is_zero(v);
    // v in span(basis) iff appending v does not raise the rank
    std::vector<Vec> rows = basis;
    std::size_t r0 = fp::rref(from_rows(rows, p)).rank;
    rows.push_back(v);
    return fp::rref(from_rows(rows, p)).rank == r0;
}

}  // namespace

TEST_CASE("scalar arithmetic") {
    CHECK(fp::add(2, 2, 3) == 1);
    CHECK(fp::sub(0, 1, 5) == 4);
    CHECK(fp::mul(6, 6, 7) == 1);
    CHECK(fp::neg(0, 7) == 0);
    CHECK(fp::pow(3, 16, 17) == 1);  // Fermat
    for (uint32_t p : {2u, 3u, 5u, 97u})
        for (uint32_t a = 1; a < p; ++a) CHECK(fp::mul(a, fp::inv(a, p), p) == 1);
    CHECK_THROWS_AS(fp::inv(0, 5), math_error);
    CHECK_THROWS_AS(fp::check_modulus(4), input_error);
    CHECK_THROWS_AS(fp::check_modulus(101), input_error);
    CHECK_NOTHROW(fp::check_modulus(2));
    CHECK_NOTHROW(fp::check_modulus(97));
}

TEST_CASE("rref: [[1,2],[2,1]] over F_3 has rank 1") {
    auto rr = fp::rref(from_rows({{1, 2}, {2, 1}}, 3));
    CHECK(rr.rank == 1);
    CHECK(rr.pivot_columns == std::vector<std::size_t>{0});
    CHECK(rr.reduced.row(0) == Vec{1, 2});
    CHECK(rr.reduced.row(1) == Vec{0, 0});
}

TEST_CASE("rref is idempotent and pivots are lowest-index") {
    for (uint32_t p : {2u, 3u}) {
        for (const Vec& flat : all_vectors(4, p)) {
            Matrix m(2, 2, p);
            m.data() = flat;
            auto rr = fp::rref(m);
            auto rr2 = fp::rref(rr.reduced);
            CHECK(rr2.reduced == rr.reduced);
            CHECK(rr2.pivot_columns == rr.pivot_columns);
            // pivot entry is 1, and it is the first nonzero of its row
            for (std::size_t i = 0; i < rr.rank; ++i) {
                CHECK(rr.reduced.at(i, rr.pivot_columns[i]) == 1);
                for (std::size_t c = 0; c < rr.pivot_columns[i]; ++c)
                    CHECK(rr.reduced.at(i, c) == 0);
            }
        }
    }
}

TEST_CASE("solve/kernel agree with exhaustive enumeration, dims <= 3, p <= 3") {
    for (uint32_t p : {2u, 3u}) {
        for (std::size_t rows : {1u, 2u, 3u}) {
            for (std::size_t cols : {1u, 2u, 3u}) {
                // a few deterministic matrices rather than all p^(r*c)
                for (std::size_t seed = 0; seed < 40; ++seed) {
                    Matrix a(rows, cols, p);
                    std::size_t s = seed * 2654435761u;
                    for (auto& x : a.data()) {
                        x = static_cast<uint32_t>(s % p);
                        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                    }
                    // kernel agrees with brute force
                    std::vector<Vec> ker_true;
                    for (const Vec& v : all_vectors(cols, p))
                        if (fp::vec_is_zero(a.apply(v)) && !fp::vec_is_zero(v)) ker_true.push_back(v);
                    auto ker = fp::kernel(a);
                    std::size_t kdim = ker.empty() ? 0 : fp::rref(from_rows(ker, p)).rank;
                    std::size_t expect = 1;
                    for (std::size_t i = 0; i < kdim; ++i) expect *= p;
                    CHECK(ker_true.size() + 1 == expect);
                    for (const Vec& v : ker_true) CHECK(in_span(ker, v, p));

                    // solve agrees with brute force for every rhs
                    for (const Vec& b : all_vectors(rows, p)) {
                        bool any = false;
                        for (const Vec& v : all_vectors(cols, p))
                            if (a.apply(v) == b) any = true;
                        auto sol = fp::solve(a, b);
                        CHECK(sol.has_value() == any);
                        if (sol) {
                            CHECK(a.apply(sol->particular) == b);
                            for (const Vec& k : sol->kernel_basis)
                                CHECK(fp::vec_is_zero(a.apply(k)));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("rank-nullity") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t seed = 0; seed < 30; ++seed) {
            Matrix a(4, 5, p);
            std::size_t s = seed + 17;
            for (auto& x : a.data()) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                x = static_cast<uint32_t>((s >> 32) % p);
            }
            CHECK(fp::rref(a).rank + fp::kernel(a).size() == a.cols());
        }
    }
}

TEST_CASE("Solver matches solve() on every rhs") {
    for (uint32_t p : {2u, 3u}) {
        for (std::size_t seed = 0; seed < 25; ++seed) {
            Matrix a(3, 2, p);
            std::size_t s = seed * 40503 + 1;
            for (auto& x : a.data()) {
                s = s * 6364136223846793005ULL + 1442695040888963407ULL;
                x = static_cast<uint32_t>((s >> 32) % p);
            }
            fp::Solver solver(a);
            for (const Vec& b : all_vectors(3, p)) {
                auto direct = fp::solve(a, b);
                auto fact = solver.particular(b);
                CHECK(direct.has_value() == fact.has_value());
                if (direct) {
                    CHECK(direct->particular == *fact);
                    CHECK(direct->kernel_basis == solver.kernel_basis());
                }
            }
        }
    }
}

TEST_CASE("coset_reduce: canonical and invariant under representative choice") {
    uint32_t p = 3;
    std::vector<Vec> basis = {{1, 0, 2}, {0, 1, 1}};
    Vec v = {2, 2, 1};
    Vec red = fp::coset_reduce(basis, v, p);
    // same coset
    CHECK(in_span(basis, fp::vec_sub(v, red, p), p));
    // every representative of the coset reduces to the same vector
    for (uint32_t c0 = 0; c0 < p; ++c0)
        for (uint32_t c1 = 0; c1 < p; ++c1) {
            Vec w = fp::vec_add(v, fp::vec_add(fp::vec_scale(basis[0], c0, p),
                                               fp::vec_scale(basis[1], c1, p), p),
                                p);
            CHECK(fp::coset_reduce(basis, w, p) == red);
        }
    CHECK(fp::coset_reduce({}, v, p) == v);
    CHECK(fp::coset_reduce(basis, fp::vec_scale(basis[0], 2, p), p) == Vec{0, 0, 0});
}

TEST_CASE("matrix shape errors") {
    Matrix a(2, 3, 5), b(2, 2, 5);
    CHECK_THROWS_AS(a + b, input_error);
    CHECK_THROWS_AS((void)(a * a), input_error);
    CHECK_THROWS_AS(a.apply(Vec{1, 2}), input_error);
    CHECK_THROWS_AS(fp::solve(a, Vec{1, 2, 3}), input_error);
    CHECK_THROWS_AS(Matrix(2, 2, 6), input_error);
}
