#include "hh1/hochschild.hpp"

namespace hh1::hochschild {

fp::Vec flatten(const LinearEndo& m) { return m.data(); }

LinearEndo unflatten(const fp::Vec& v, std::size_t dim, uint32_t p) {
    if (v.size() != dim * dim) throw input_error("unflatten: wrong length");
    LinearEndo m(dim, dim, p);
    m.data() = v;
    for (auto& x : m.data()) x %= p;
    return m;
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_witness(const Algebra& a,
                                                                   const LinearEndo& f) {
    const std::size_t n = a.dim();
    if (f.rows() != n || f.cols() != n || f.modulus() != a.modulus())
        throw input_error("endomorphism does not match algebra");
    for (std::size_t i = 0; i < n; ++i) {
        fp::Vec ei(n, 0);
        ei[i] = 1;
        fp::Vec fi = f.col(i);
        for (std::size_t j = 0; j < n; ++j) {
            fp::Vec ej(n, 0);
            ej[j] = 1;
            fp::Vec lhs = f.apply(a.product_of_basis(i, j));
            fp::Vec rhs = fp::vec_add(a.multiply(ei, f.col(j)), a.multiply(fi, ej), a.modulus());
            if (lhs != rhs) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

bool is_derivation(const Algebra& a, const LinearEndo& f) {
    return !leibniz_witness(a, f).has_value();
}

fp::Matrix leibniz_operator(const Algebra& a) {
    const std::size_t n = a.dim();
    const uint32_t p = a.modulus();
    // unknown M[u][v] at flat index u*n+v, equation index ((i*n+j)*n+k)
    fp::Matrix sys(n * n * n, n * n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t row = (i * n + j) * n + k;
                // f(e_i e_j): sum_m c_ij^m M[k][m]
                for (std::size_t m = 0; m < n; ++m) {
                    uint32_t c = a.structure_constant(i, j, m);
                    if (c) sys.set(row, k * n + m, fp::add(sys.at(row, k * n + m), c, p));
                }
                // - e_i f(e_j): f(e_j) = sum_u M[u][j] e_u, e_i e_u contributes c_iu^k
                for (std::size_t u = 0; u < n; ++u) {
                    uint32_t c = a.structure_constant(i, u, k);
                    if (c) sys.set(row, u * n + j, fp::sub(sys.at(row, u * n + j), c, p));
                }
                // - f(e_i) e_j
                for (std::size_t u = 0; u < n; ++u) {
                    uint32_t c = a.structure_constant(u, j, k);
                    if (c) sys.set(row, u * n + i, fp::sub(sys.at(row, u * n + i), c, p));
                }
            }
    return sys;
}

std::vector<LinearEndo> derivation_space(const Algebra& a) {
    std::vector<LinearEndo> out;
    for (const fp::Vec& v : fp::kernel(leibniz_operator(a)))
        out.push_back(unflatten(v, a.dim(), a.modulus()));
    return out;
}

std::vector<fp::Vec> inner_subspace(const Algebra& a) {
    const std::size_t n = a.dim();
    // rows of L: flattened ad_{e_i}; canonical image basis from RREF
    std::vector<fp::Vec> rows;
    for (std::size_t i = 0; i < n; ++i) {
        fp::Vec ei(n, 0);
        ei[i] = 1;
        rows.push_back(flatten(a.ad_operator(ei)));
    }
    fp::RrefResult rr = fp::rref(fp::Matrix::from_rows(rows, n * n, a.modulus()));
    std::vector<fp::Vec> basis;
    for (std::size_t r = 0; r < rr.rank; ++r) basis.push_back(rr.reduced.row(r));
    return basis;
}

std::vector<LinearEndo> inner_derivations(const Algebra& a) {
    std::vector<LinearEndo> out;
    for (const fp::Vec& v : inner_subspace(a)) out.push_back(unflatten(v, a.dim(), a.modulus()));
    return out;
}

HH1Class class_of(const Algebra& a, const LinearEndo& d) {
    if (auto w = leibniz_witness(a, d))
        throw math_error("class_of: input is not a derivation (Leibniz fails at basis pair (" +
                         std::to_string(w->first) + "," + std::to_string(w->second) + "))");
    fp::Vec red = fp::coset_reduce(inner_subspace(a), flatten(d), a.modulus());
    return HH1Class{unflatten(red, a.dim(), a.modulus())};
}

std::vector<HH1Class> hh1_basis(const Algebra& a) {
    const auto inner = inner_subspace(a);
    std::vector<fp::Vec> reduced;
    for (const LinearEndo& d : derivation_space(a))
        reduced.push_back(fp::coset_reduce(inner, flatten(d), a.modulus()));
    if (reduced.empty()) return {};
    fp::RrefResult rr = fp::rref(fp::Matrix::from_rows(reduced, a.dim() * a.dim(), a.modulus()));
    std::vector<HH1Class> out;
    for (std::size_t r = 0; r < rr.rank; ++r)
        out.push_back(HH1Class{unflatten(rr.reduced.row(r), a.dim(), a.modulus())});
    return out;
}

LinearEndo bracket(const Algebra& a, const LinearEndo& d, const LinearEndo& e) {
    if (d.modulus() != a.modulus() || e.modulus() != a.modulus() || d.rows() != a.dim() ||
        e.rows() != a.dim())
        throw input_error("bracket: operand does not match algebra");
    return d * e - e * d;
}

HH1Class bracket_classes(const Algebra& a, const HH1Class& x, const HH1Class& y) {
    return class_of(a, bracket(a, x.representative, y.representative));
}

LinearEndo p_power(const Algebra& a, const LinearEndo& d) {
    if (auto w = leibniz_witness(a, d))
        throw math_error("p_power: input is not a derivation (Leibniz fails at basis pair (" +
                         std::to_string(w->first) + "," + std::to_string(w->second) + "))");
    LinearEndo r = d;
    for (uint32_t i = 1; i < a.modulus(); ++i) r = r * d;
    return r;
}

HH1Class p_power_class(const Algebra& a, const HH1Class& x) {
    return class_of(a, p_power(a, x.representative));
}

}  // namespace hh1::hochschild
