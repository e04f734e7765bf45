#include "hh1/transfer.hpp"

namespace hh1::transfer {

namespace {

fp::Vec embed(const GroupBimoduleSetup& setup, const fp::Vec& sub_vec) {
    fp::Vec out(setup.big->dim(), 0);
    for (std::size_t h = 0; h < setup.sub->dim(); ++h) out[setup.embedding[h]] = sub_vec[h];
    return out;
}

}  // namespace

void validate_setup(const GroupBimoduleSetup& setup) {
    const Algebra& big = *setup.big;
    const Algebra& sub = *setup.sub;
    if (big.modulus() != sub.modulus()) throw input_error("setup: modulus mismatch");
    if (!algebra::is_group_algebra_basis(big) || !algebra::is_group_algebra_basis(sub))
        throw math_error("setup requires group algebras");
    if (setup.embedding.size() != sub.dim()) throw input_error("setup: embedding has wrong size");
    for (std::size_t h = 0; h < sub.dim(); ++h)
        for (std::size_t k = 0; k < sub.dim(); ++k) {
            std::size_t lhs = setup.embedding[algebra::basis_product_index(sub, h, k)];
            std::size_t rhs = algebra::basis_product_index(big, setup.embedding[h],
                                                           setup.embedding[k]);
            if (lhs != rhs) throw math_error("setup: embedding is not multiplicative");
        }
    if (setup.coset_reps.empty() || setup.coset_reps[0] != algebra::basis_identity_index(big))
        throw input_error("setup: coset_reps[0] must be the identity");
    std::vector<bool> covered(big.dim(), false);
    for (std::size_t s : setup.coset_reps)
        for (std::size_t h = 0; h < sub.dim(); ++h) {
            std::size_t g = algebra::basis_product_index(big, s, setup.embedding[h]);
            if (covered[g]) throw math_error("setup: coset representatives overlap");
            covered[g] = true;
        }
    for (bool c : covered)
        if (!c) throw math_error("setup: coset representatives do not cover the group");
}

fp::Scalar symmetrizing_form(const Algebra& a, const fp::Vec& x, const fp::Vec& y) {
    if (!algebra::is_group_algebra_basis(a))
        throw math_error("symmetrizing_form requires a group algebra");
    uint32_t acc = 0;
    for (std::size_t g = 0; g < a.dim(); ++g) {
        if (!x[g]) continue;
        std::size_t ginv = algebra::basis_inverse_index(a, g);
        acc = fp::add(acc, fp::mul(x[g], y[ginv], a.modulus()), a.modulus());
    }
    return fp::Scalar(acc, a.modulus());
}

fp::Vec dual_basis_projection(const GroupBimoduleSetup& setup, std::size_t s, const fp::Vec& x) {
    bool is_rep = false;
    for (std::size_t r : setup.coset_reps) is_rep |= (r == s);
    if (!is_rep) throw input_error("dual_basis_projection: not a coset representative");
    const Algebra& big = *setup.big;
    fp::Vec out(setup.sub->dim(), 0);
    for (std::size_t h = 0; h < setup.sub->dim(); ++h) {
        std::size_t g = algebra::basis_product_index(big, s, setup.embedding[h]);
        out[h] = x[g];
    }
    return out;
}

LinearEndo transfer_map(const GroupBimoduleSetup& setup, const LinearEndo& f) {
    validate_setup(setup);
    if (setup.coset_reps.size() != 2)
        throw math_error("unsupported setup: transfer formula requires exactly two cosets");
    const Algebra& big = *setup.big;
    const Algebra& sub = *setup.sub;
    if (f.rows() != sub.dim() || f.cols() != sub.dim() || f.modulus() != sub.modulus())
        throw input_error("transfer_map: endomorphism does not match subalgebra");
    const uint32_t p = big.modulus();
    const std::size_t t = setup.coset_reps[1];
    // <e_u, v> = v[u^{-1}]
    auto form_with_basis = [&](std::size_t u, const fp::Vec& v) {
        return v[algebra::basis_inverse_index(big, u)];
    };
    LinearEndo out(big.dim(), big.dim(), p);
    for (std::size_t g = 0; g < big.dim(); ++g) {
        fp::Vec a_vec(big.dim(), 0);
        a_vec[g] = 1;
        std::size_t gt = algebra::basis_product_index(big, g, t);
        fp::Vec at_vec(big.dim(), 0);
        at_vec[gt] = 1;
        fp::Vec f_phi1_a = embed(setup, f.apply(dual_basis_projection(setup, setup.coset_reps[0], a_vec)));
        fp::Vec f_phit_a = embed(setup, f.apply(dual_basis_projection(setup, t, a_vec)));
        fp::Vec f_phi1_at = embed(setup, f.apply(dual_basis_projection(setup, setup.coset_reps[0], at_vec)));
        fp::Vec f_phit_at = embed(setup, f.apply(dual_basis_projection(setup, t, at_vec)));
        fp::Vec val(big.dim(), 0);
        for (std::size_t h_sub = 0; h_sub < sub.dim(); ++h_sub) {
            std::size_t h = setup.embedding[h_sub];
            std::size_t hinv = algebra::basis_inverse_index(big, h);
            std::size_t hinv_t = algebra::basis_product_index(big, hinv, t);
            std::size_t th = algebra::basis_product_index(big, t, h);
            std::size_t ht = algebra::basis_product_index(big, h, t);
            std::size_t tht = algebra::basis_product_index(big, th, t);
            val[h] = fp::add(val[h], form_with_basis(hinv, f_phi1_a), p);
            val[th] = fp::add(val[th], form_with_basis(hinv_t, f_phit_a), p);
            val[ht] = fp::add(val[ht], form_with_basis(hinv, f_phi1_at), p);
            val[tht] = fp::add(val[tht], form_with_basis(hinv, f_phit_at), p);
        }
        for (std::size_t row = 0; row < big.dim(); ++row) out.set(row, g, val[row]);
    }
    return out;
}

InnerSolveOutcome is_inner(const Algebra& a,
                           const std::vector<std::pair<fp::Vec, fp::Vec>>& constraints) {
    const std::size_t n = a.dim();
    if (constraints.empty()) return InnerSolveOutcome{fp::Vec(n, 0)};
    fp::Matrix sys(n * constraints.size(), n, a.modulus());
    fp::Vec rhs(n * constraints.size(), 0);
    for (std::size_t c = 0; c < constraints.size(); ++c) {
        const auto& [g, v] = constraints[c];
        // [x, g] = (R_g - L_g)(x)
        fp::Matrix op = a.right_mult_operator(g) - a.left_mult_operator(g);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t col = 0; col < n; ++col) sys.set(c * n + r, col, op.at(r, col));
            rhs[c * n + r] = v[r] % a.modulus();
        }
    }
    auto sol = fp::solve(sys, rhs);
    if (!sol) return InnerSolveOutcome{std::nullopt};
    return InnerSolveOutcome{sol->particular};
}

DiscrepancyReport ppower_transfer_discrepancy(const GroupBimoduleSetup& setup,
                                              const LinearEndo& f) {
    const Algebra& big = *setup.big;
    const Algebra& sub = *setup.sub;
    if (auto w = hochschild::leibniz_witness(sub, f))
        throw math_error("ppower_transfer_discrepancy: f is not a derivation of the subalgebra");
    LinearEndo trf = transfer_map(setup, f);
    LinearEndo fp_pow = hochschild::p_power(sub, f);
    DiscrepancyReport rep{transfer_map(setup, fp_pow), trf, trf, false, false, false};
    LinearEndo acc = trf;
    for (uint32_t i = 1; i < big.modulus(); ++i) acc = acc * trf;
    rep.ppower_of_tr = acc;
    rep.delta = rep.ppower_of_tr - rep.tr_of_ppower;
    rep.tr_f_is_derivation = hochschild::is_derivation(big, trf);
    // delta = ad_x as a full linear system over x
    const std::size_t n = big.dim();
    fp::Matrix sys(n * n, n, big.modulus());
    for (std::size_t k = 0; k < n; ++k) {
        fp::Vec ek(n, 0);
        ek[k] = 1;
        fp::Vec col = hochschild::flatten(big.ad_operator(ek));
        for (std::size_t r = 0; r < n * n; ++r) sys.set(r, k, col[r]);
    }
    rep.delta_is_inner = fp::solve(sys, hochschild::flatten(rep.delta)).has_value();
    rep.commutes = rep.delta_is_inner;
    return rep;
}

LinearEndo morita_extend(const Algebra& a, const Algebra& mat, std::size_t m,
                         const LinearEndo& d) {
    const std::size_t n = a.dim();
    if (mat.dim() != m * m * n) throw input_error("morita_extend: matrix algebra shape mismatch");
    LinearEndo out(mat.dim(), mat.dim(), a.modulus());
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    out.set((s * m + t) * n + j, (s * m + t) * n + i, d.at(j, i));
    return out;
}

HH1Class morita_induced_class_map(const Algebra& a, const Algebra& mat, std::size_t m,
                                  const HH1Class& x) {
    return hochschild::class_of(mat, morita_extend(a, mat, m, x.representative));
}

}  // namespace hh1::transfer
