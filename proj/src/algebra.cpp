#include "hh1/algebra.hpp"

#include <algorithm>

namespace hh1::algebra {

std::string Violation::describe() const {
    if (kind == "associativity")
        return "associativity fails at basis triple (" + std::to_string(i) + "," +
               std::to_string(j) + "," + std::to_string(k) + ")";
    return "unit law fails at basis index " + std::to_string(i);
}

Algebra::Algebra(uint32_t p, std::size_t dim, std::vector<std::string> labels,
                 fp::Vec structure_constants, fp::Vec unit, std::size_t dim_cap)
    : p_(p), dim_(dim), labels_(std::move(labels)),
      table_(std::move(structure_constants)), unit_(std::move(unit)) {
    fp::check_modulus(p);
    std::size_t cap = std::min(dim_cap, kHardDimCap);
    if (dim == 0) throw input_error("algebra dimension must be positive");
    if (dim > cap)
        throw input_error("algebra dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(cap));
    if (labels_.size() != dim) throw input_error("labels length != dim");
    if (table_.size() != dim * dim * dim) throw input_error("structure constant table has wrong size");
    if (unit_.size() != dim) throw input_error("unit vector has wrong length");
    for (auto& x : table_) x %= p;
    for (auto& x : unit_) x %= p;
}

fp::Vec Algebra::product_of_basis(std::size_t i, std::size_t j) const {
    auto it = table_.begin() + (i * dim_ + j) * dim_;
    return fp::Vec(it, it + dim_);
}

fp::Vec Algebra::multiply(const fp::Vec& x, const fp::Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw input_error("element dimension mismatch");
    fp::Vec r(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!y[j]) continue;
            uint32_t c = fp::mul(x[i], y[j], p_);
            for (std::size_t k = 0; k < dim_; ++k)
                r[k] = fp::add(r[k], fp::mul(c, structure_constant(i, j, k), p_), p_);
        }
    }
    return r;
}

fp::Vec Algebra::commutator(const fp::Vec& x, const fp::Vec& y) const {
    return fp::vec_sub(multiply(x, y), multiply(y, x), p_);
}

fp::Matrix Algebra::left_mult_operator(const fp::Vec& x) const {
    fp::Matrix m(dim_, dim_, p_);
    for (std::size_t j = 0; j < dim_; ++j) {
        fp::Vec ej(dim_, 0);
        ej[j] = 1;
        fp::Vec col = multiply(x, ej);
        for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
    }
    return m;
}

fp::Matrix Algebra::right_mult_operator(const fp::Vec& x) const {
    fp::Matrix m(dim_, dim_, p_);
    for (std::size_t j = 0; j < dim_; ++j) {
        fp::Vec ej(dim_, 0);
        ej[j] = 1;
        fp::Vec col = multiply(ej, x);
        for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, col[i]);
    }
    return m;
}

fp::Matrix Algebra::ad_operator(const fp::Vec& x) const {
    return left_mult_operator(x) - right_mult_operator(x);
}

std::string Algebra::format_element(const fp::Vec& x) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        if (!s.empty()) s += " + ";
        if (x[i] != 1) s += std::to_string(x[i]) + "*";
        s += labels_[i];
    }
    return s.empty() ? "0" : s;
}

std::vector<Violation> validate(const Algebra& a) {
    std::vector<Violation> out;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            fp::Vec eij = a.product_of_basis(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                fp::Vec ejk = a.product_of_basis(j, k);
                fp::Vec ek(n, 0), ei(n, 0);
                ek[k] = 1;
                ei[i] = 1;
                if (a.multiply(eij, ek) != a.multiply(ei, ejk))
                    out.push_back({"associativity", i, j, k});
            }
        }
    for (std::size_t i = 0; i < n; ++i) {
        fp::Vec ei(n, 0);
        ei[i] = 1;
        if (a.multiply(a.unit(), ei) != ei || a.multiply(ei, a.unit()) != ei)
            out.push_back({"unit", i, 0, 0});
    }
    return out;
}

Algebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley,
                      std::vector<std::string> labels, uint32_t p, std::size_t dim_cap) {
    const std::size_t n = cayley.size();
    if (n == 0) throw input_error("empty Cayley table");
    for (const auto& row : cayley) {
        if (row.size() != n) throw input_error("Cayley table is not square");
        for (std::size_t x : row)
            if (x >= n) throw input_error("Cayley table entry out of range");
    }
    // rows and columns must be permutations
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            if (seen_row[cayley[i][j]])
                throw input_error("not a group table: row " + std::to_string(i) +
                                  " is not a permutation (cancellation fails)");
            seen_row[cayley[i][j]] = true;
            if (seen_col[cayley[j][i]])
                throw input_error("not a group table: column " + std::to_string(i) +
                                  " is not a permutation (cancellation fails)");
            seen_col[cayley[j][i]] = true;
        }
    }
    // two-sided identity
    std::size_t id = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n; ++g)
            if (cayley[e][g] != g || cayley[g][e] != g) { ok = false; break; }
        if (ok) { id = e; break; }
    }
    if (id == n) throw input_error("not a group table: no two-sided identity");
    // inverses
    for (std::size_t g = 0; g < n; ++g) {
        bool has = false;
        for (std::size_t h = 0; h < n; ++h)
            if (cayley[g][h] == id && cayley[h][g] == id) { has = true; break; }
        if (!has)
            throw input_error("not a group table: element " + std::to_string(g) + " has no inverse");
    }
    // associativity
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (cayley[cayley[i][j]][k] != cayley[i][cayley[j][k]])
                    throw input_error("not a group table: associativity fails at (" +
                                      std::to_string(i) + "," + std::to_string(j) + "," +
                                      std::to_string(k) + ")");

    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    fp::Vec table(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[(i * n + j) * n + cayley[i][j]] = 1;
    fp::Vec unit(n, 0);
    unit[id] = 1;
    return Algebra(p, n, std::move(labels), std::move(table), std::move(unit), dim_cap);
}

Algebra truncated_poly(uint32_t p, std::size_t n, std::size_t dim_cap) {
    if (n == 0) throw input_error("truncated_poly requires n >= 1");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    fp::Vec table(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) table[(i * n + j) * n + (i + j)] = 1;
    fp::Vec unit(n, 0);
    unit[0] = 1;
    return Algebra(p, n, std::move(labels), std::move(table), std::move(unit), dim_cap);
}

Algebra matrix_algebra(const Algebra& a, std::size_t m, std::size_t dim_cap) {
    if (m == 0) throw input_error("matrix_algebra requires m >= 1");
    const std::size_t d = a.dim();
    const std::size_t n = m * m * d;
    auto idx = [&](std::size_t s, std::size_t t, std::size_t i) { return (s * m + t) * d + i; };
    std::vector<std::string> labels(n);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t i = 0; i < d; ++i)
                labels[idx(s, t, i)] =
                    "E" + std::to_string(s) + std::to_string(t) + "*" + a.labels()[i];
    if (n > std::min(dim_cap, kHardDimCap))
        throw input_error("matrix_algebra dimension " + std::to_string(n) + " exceeds cap");
    fp::Vec table(n * n * n, 0);
    // (E_st x e_i)(E_uv x e_j) = delta_tu E_sv x (e_i e_j)
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t v = 0; v < m; ++v)
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) {
                        std::size_t row = idx(s, t, i), col = idx(t, v, j);
                        for (std::size_t k = 0; k < d; ++k)
                            table[(row * n + col) * n + idx(s, v, k)] = a.structure_constant(i, j, k);
                    }
    fp::Vec unit(n, 0);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t i = 0; i < d; ++i) unit[idx(s, s, i)] = a.unit()[i];
    return Algebra(a.modulus(), n, std::move(labels), std::move(table), std::move(unit), dim_cap);
}

std::vector<fp::Vec> center(const Algebra& a) {
    const std::size_t n = a.dim();
    // stack the operators z |-> [z, e_i] for every basis e_i
    fp::Matrix stacked(n * n, n, a.modulus());
    for (std::size_t i = 0; i < n; ++i) {
        fp::Vec ei(n, 0);
        ei[i] = 1;
        fp::Matrix ad = a.left_mult_operator(ei) - a.right_mult_operator(ei);
        // rows of -ad(e_i) applied to z equal [z, e_i]
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                stacked.set(i * n + r, c, fp::neg(ad.at(r, c), a.modulus()));
    }
    return fp::kernel(stacked);
}

bool is_group_algebra_basis(const Algebra& a) {
    const std::size_t n = a.dim();
    std::size_t ones = 0;
    for (uint32_t u : a.unit()) {
        if (u == 1) ++ones;
        else if (u != 0) return false;
    }
    if (ones != 1) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t hits = 0;
            for (std::size_t k = 0; k < n; ++k) {
                uint32_t c = a.structure_constant(i, j, k);
                if (c == 1) ++hits;
                else if (c != 0) return false;
            }
            if (hits != 1) return false;
        }
    return true;
}

std::size_t basis_product_index(const Algebra& a, std::size_t g, std::size_t h) {
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.structure_constant(g, h, k)) return k;
    throw math_error("basis product is not a basis element");
}

std::size_t basis_identity_index(const Algebra& a) {
    for (std::size_t k = 0; k < a.dim(); ++k)
        if (a.unit()[k]) return k;
    throw math_error("unit is not a basis element");
}

std::size_t basis_inverse_index(const Algebra& a, std::size_t g) {
    std::size_t id = basis_identity_index(a);
    for (std::size_t h = 0; h < a.dim(); ++h)
        if (basis_product_index(a, g, h) == id) return h;
    throw math_error("basis element has no inverse");
}

}  // namespace hh1::algebra
