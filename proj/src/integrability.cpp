#include "hh1/integrability.hpp"

namespace hh1::integrability {

namespace {

void check_hd_shape(const Algebra& a, const HigherDerivation& u) {
    if (u.terms.size() != u.order + 1) throw input_error("higher derivation has wrong term count");
    for (const auto& t : u.terms)
        if (t.rows() != a.dim() || t.cols() != a.dim() || t.modulus() != a.modulus())
            throw input_error("higher derivation term does not match algebra");
}

uint32_t binomial_mod(std::size_t n, std::size_t c, uint32_t p) {
    if (c > n) return 0;
    // Pascal's triangle mod p; n stays tiny here
    std::vector<uint32_t> row(c + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = std::min(i, c); j >= 1; --j) row[j] = fp::add(row[j], row[j - 1], p);
    return row[c];
}

}  // namespace

HigherDerivation hd_identity(const Algebra& a, std::size_t order) {
    if (order < 1) throw input_error("truncation order must be >= 1");
    HigherDerivation u;
    u.order = order;
    u.terms.assign(order + 1, fp::Matrix(a.dim(), a.dim(), a.modulus()));
    u.terms[0] = fp::Matrix::identity(a.dim(), a.modulus());
    return u;
}

bool hd_is_valid(const Algebra& a, const HigherDerivation& u) {
    check_hd_shape(a, u);
    if (u.terms[0] != fp::Matrix::identity(a.dim(), a.modulus())) return false;
    const std::size_t dim = a.dim();
    for (std::size_t n = 1; n <= u.order; ++n)
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                fp::Vec lhs = u.terms[n].apply(a.product_of_basis(i, j));
                fp::Vec rhs(dim, 0);
                for (std::size_t s = 0; s <= n; ++s)
                    rhs = fp::vec_add(
                        rhs, a.multiply(u.terms[s].col(i), u.terms[n - s].col(j)), a.modulus());
                if (lhs != rhs) return false;
            }
    return true;
}

std::optional<std::size_t> leading_index(const HigherDerivation& u) {
    for (std::size_t i = 1; i <= u.order; ++i)
        if (!u.terms[i].is_zero()) return i;
    return std::nullopt;
}

HigherDerivation hd_compose(const Algebra& a, const HigherDerivation& u,
                            const HigherDerivation& v) {
    check_hd_shape(a, u);
    check_hd_shape(a, v);
    if (u.order != v.order) throw input_error("hd_compose: order mismatch");
    HigherDerivation r = hd_identity(a, u.order);
    for (std::size_t n = 0; n <= u.order; ++n) {
        fp::Matrix term(a.dim(), a.dim(), a.modulus());
        for (std::size_t i = 0; i <= n; ++i) term = term + u.terms[i] * v.terms[n - i];
        r.terms[n] = term;
    }
    return r;
}

HigherDerivation hd_inverse(const Algebra& a, const HigherDerivation& u) {
    check_hd_shape(a, u);
    HigherDerivation r = hd_identity(a, u.order);
    // E_n = -sum_{i=1..n} D_i o E_{n-i}
    for (std::size_t n = 1; n <= u.order; ++n) {
        fp::Matrix acc(a.dim(), a.dim(), a.modulus());
        for (std::size_t i = 1; i <= n; ++i) acc = acc + u.terms[i] * r.terms[n - i];
        r.terms[n] = acc.scaled(fp::neg(1, a.modulus()));
    }
    return r;
}

HigherDerivation hd_power(const Algebra& a, const HigherDerivation& u, std::size_t n) {
    HigherDerivation r = hd_identity(a, u.order);
    for (std::size_t i = 0; i < n; ++i) r = hd_compose(a, r, u);
    return r;
}

LinearEndo hd_term_formula(const Algebra& a, const HigherDerivation& u, std::size_t n,
                           std::size_t l) {
    check_hd_shape(a, u);
    if (l > u.order) throw input_error("hd_term_formula: l exceeds truncation order");
    if (l == 0) return fp::Matrix::identity(a.dim(), a.modulus());
    fp::Matrix acc(a.dim(), a.dim(), a.modulus());
    // enumerate compositions of l into c positive parts, c = 1..l
    std::vector<std::size_t> parts;
    auto rec = [&](auto&& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            uint32_t b = binomial_mod(n, parts.size(), a.modulus());
            if (!b) return;
            fp::Matrix prod = fp::Matrix::identity(a.dim(), a.modulus());
            for (std::size_t part : parts) prod = prod * u.terms[part];
            acc = acc + prod.scaled(b);
            return;
        }
        for (std::size_t first = 1; first <= remaining; ++first) {
            parts.push_back(first);
            self(self, remaining - first);
            parts.pop_back();
        }
    };
    rec(rec, l);
    return acc;
}

namespace {

struct IntegrateSearch {
    const Algebra& a;
    fp::Solver leibniz;                     // factored dim^3 x dim^2 system
    std::vector<fp::Vec> der_basis_flat;    // kernel of the Leibniz operator
    std::size_t order;
    std::size_t branch_limit;
    std::vector<LinearEndo> terms;          // D_0 ... D_N, filled as we go
    std::size_t nodes = 0;
    std::size_t last_fail_degree = 0;
    bool hit_limit = false;

    // rhs of the degree-n affine system: interior convolution terms
    fp::Vec rhs_at(std::size_t n) const {
        const std::size_t dim = a.dim();
        fp::Vec rhs(dim * dim * dim, 0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                fp::Vec acc(dim, 0);
                for (std::size_t s = 1; s < n; ++s)
                    acc = fp::vec_add(acc, a.multiply(terms[s].col(i), terms[n - s].col(j)),
                                      a.modulus());
                for (std::size_t k = 0; k < dim; ++k) rhs[(i * dim + j) * dim + k] = acc[k];
            }
        return rhs;
    }

    bool dfs(std::size_t n) {
        if (n > order) return true;
        auto sol = leibniz.particular(rhs_at(n));
        if (!sol) {
            last_fail_degree = n;
            return false;
        }
        // canonical representative first, then Der(A)-translates in RREF
        // basis order (mixed-radix counter, first direction slowest)
        const uint32_t p = a.modulus();
        const std::size_t k = der_basis_flat.size();
        std::vector<uint32_t> digits(k, 0);
        while (true) {
            if (nodes >= branch_limit) {
                hit_limit = true;
                return false;
            }
            ++nodes;
            fp::Vec cand = *sol;
            for (std::size_t i = 0; i < k; ++i)
                if (digits[i])
                    cand = fp::vec_add(cand, fp::vec_scale(der_basis_flat[i], digits[i], p), p);
            terms[n] = hochschild::unflatten(cand, a.dim(), p);
            if (dfs(n + 1)) return true;
            if (hit_limit) return false;
            // next counter value
            std::size_t pos = k;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < p) break;
                digits[pos] = 0;
                if (pos == 0) return false;  // all branches exhausted
            }
            if (k == 0) return false;
        }
    }
};

}  // namespace

namespace {

IntegrationOutcome integrate_with(const Algebra& a, const fp::Solver& leibniz,
                                  const std::vector<fp::Vec>& der_basis_flat,
                                  const LinearEndo& d, std::size_t r, std::size_t order,
                                  std::size_t branch_limit) {
    if (r < 1 || r > order) throw input_error("integrate requires 1 <= r <= order");
    if (auto w = hochschild::leibniz_witness(a, d))
        throw math_error("integrate: input is not a derivation (Leibniz fails at basis pair (" +
                         std::to_string(w->first) + "," + std::to_string(w->second) + "))");
    IntegrateSearch search{a, leibniz, der_basis_flat, order, branch_limit, {}};
    search.terms = hd_identity(a, order).terms;
    search.terms[r] = d;

    IntegrationOutcome out;
    // degrees < r carry zero terms; degree r is Leibniz-consistent because d
    // is a derivation, so the search starts at r+1
    if (search.dfs(r + 1)) {
        HigherDerivation hd{order, search.terms};
        out.integrated = std::move(hd);
    } else {
        out.obstructed_degree = search.last_fail_degree;
    }
    out.branches_explored = search.nodes;
    out.hit_branch_limit = search.hit_limit;
    return out;
}

}  // namespace

IntegrationOutcome integrate(const Algebra& a, const LinearEndo& d, std::size_t r,
                             std::size_t order, std::size_t branch_limit) {
    fp::Solver leibniz(hochschild::leibniz_operator(a));
    std::vector<fp::Vec> der_flat;
    for (const auto& b : hochschild::derivation_space(a)) der_flat.push_back(hochschild::flatten(b));
    return integrate_with(a, leibniz, der_flat, d, r, order, branch_limit);
}

Hh1rResult hh1_r(const Algebra& a, std::size_t r, std::size_t order, std::size_t branch_limit) {
    if (r < 1 || r > order) throw input_error("hh1_r requires 1 <= r <= order");
    Hh1rResult res;
    fp::Solver leibniz(hochschild::leibniz_operator(a));
    std::vector<LinearEndo> der = hochschild::derivation_space(a);
    std::vector<fp::Vec> der_flat;
    for (const auto& b : der) der_flat.push_back(hochschild::flatten(b));
    const uint32_t p = a.modulus();

    // The order-N integrable derivations form a subspace (sums of integrable
    // derivations integrate term-by-term, and scaling is repeated addition),
    // but integrability of a basis does not determine the subspace: a
    // non-integrable basis can have integrable combinations. Enumerate the
    // whole derivation space when it is small; otherwise fall back to the
    // basis and report a lower bound unless everything integrated.
    std::size_t total = 1;
    bool full = true;
    for (std::size_t i = 0; i < der.size(); ++i) {
        if (total > 729 / p) {
            full = false;
            break;
        }
        total *= p;
    }

    bool decisive = true, all_integrated = true;
    std::vector<fp::Vec> class_vectors;
    auto consider = [&](const LinearEndo& d) {
        IntegrationOutcome o = integrate_with(a, leibniz, der_flat, d, r, order, branch_limit);
        if (o.hit_branch_limit) decisive = false;
        if (o.integrated)
            class_vectors.push_back(hochschild::flatten(hochschild::class_of(a, d).representative));
        else
            all_integrated = false;
    };
    if (der.empty()) {
        res.exact = true;
        return res;
    }
    if (full) {
        const std::size_t n = a.dim();
        std::vector<uint32_t> digits(der.size(), 0);
        while (true) {  // all nonzero combinations, mixed-radix
            std::size_t pos = digits.size();
            while (pos > 0) {
                --pos;
                if (++digits[pos] < p) break;
                digits[pos] = 0;
                if (pos == 0) goto done;
            }
            fp::Vec flat(n * n, 0);
            for (std::size_t i = 0; i < digits.size(); ++i)
                if (digits[i]) flat = fp::vec_add(flat, fp::vec_scale(der_flat[i], digits[i], p), p);
            consider(hochschild::unflatten(flat, n, p));
        }
    done:;
    } else {
        for (const LinearEndo& d : der) consider(d);
    }
    res.exact = decisive && (full || all_integrated);

    if (class_vectors.empty()) return res;
    fp::RrefResult rr =
        fp::rref(fp::Matrix::from_rows(class_vectors, a.dim() * a.dim(), a.modulus()));
    for (std::size_t i = 0; i < rr.rank; ++i)
        res.classes.push_back(
            HH1Class{hochschild::unflatten(rr.reduced.row(i), a.dim(), a.modulus())});
    return res;
}

TruncatedElement te_zero(const Algebra& a, std::size_t order) {
    return TruncatedElement{order, std::vector<fp::Vec>(order + 1, fp::Vec(a.dim(), 0))};
}

TruncatedElement te_one(const Algebra& a, std::size_t order) {
    TruncatedElement u = te_zero(a, order);
    u.coeffs[0] = a.unit();
    return u;
}

TruncatedElement te_add(const Algebra& a, const TruncatedElement& u, const TruncatedElement& v) {
    if (u.order != v.order) throw input_error("truncated element order mismatch");
    TruncatedElement r = u;
    for (std::size_t i = 0; i <= u.order; ++i)
        r.coeffs[i] = fp::vec_add(u.coeffs[i], v.coeffs[i], a.modulus());
    return r;
}

TruncatedElement te_mul(const Algebra& a, const TruncatedElement& u, const TruncatedElement& v) {
    if (u.order != v.order) throw input_error("truncated element order mismatch");
    TruncatedElement r = te_zero(a, u.order);
    for (std::size_t i = 0; i <= u.order; ++i) {
        if (fp::vec_is_zero(u.coeffs[i])) continue;
        for (std::size_t j = 0; i + j <= u.order; ++j)
            r.coeffs[i + j] = fp::vec_add(r.coeffs[i + j], a.multiply(u.coeffs[i], v.coeffs[j]),
                                          a.modulus());
    }
    return r;
}

TruncatedElement te_inverse_unipotent(const Algebra& a, const TruncatedElement& u) {
    if (u.coeffs.at(0) != a.unit())
        throw input_error("te_inverse_unipotent: constant coefficient must be the unit");
    // (1+x)^{-1} = sum (-x)^k, x nilpotent in A[t]/t^{N+1}
    TruncatedElement x = u;
    x.coeffs[0] = fp::Vec(a.dim(), 0);
    TruncatedElement neg_x = te_zero(a, u.order);
    for (std::size_t i = 0; i <= u.order; ++i)
        neg_x.coeffs[i] = fp::vec_scale(x.coeffs[i], fp::neg(1, a.modulus()), a.modulus());
    TruncatedElement acc = te_one(a, u.order);
    TruncatedElement pow = te_one(a, u.order);
    for (std::size_t k = 1; k <= u.order; ++k) {
        pow = te_mul(a, pow, neg_x);
        acc = te_add(a, acc, pow);
    }
    return acc;
}

HigherDerivation conjugation_hd(const Algebra& a, const TruncatedElement& c) {
    TruncatedElement cinv = te_inverse_unipotent(a, c);
    HigherDerivation r = hd_identity(a, c.order);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        TruncatedElement e = te_zero(a, c.order);
        e.coeffs[0] = fp::Vec(a.dim(), 0);
        e.coeffs[0][i] = 1;
        TruncatedElement img = te_mul(a, te_mul(a, c, e), cinv);
        for (std::size_t n = 0; n <= c.order; ++n)
            for (std::size_t row = 0; row < a.dim(); ++row)
                r.terms[n].set(row, i, img.coeffs[n][row]);
    }
    return r;
}

HigherDerivation conj_adjust(const Algebra& a, const HigherDerivation& hd, const fp::Vec& d,
                             std::size_t r) {
    check_hd_shape(a, hd);
    if (d.size() != a.dim()) throw input_error("conj_adjust: element dimension mismatch");
    if (r < 1 || r > hd.order) throw input_error("conj_adjust requires 1 <= r <= order");
    auto lead = leading_index(hd);
    if (lead && *lead < r) throw math_error("conj_adjust: leading index < r");
    TruncatedElement c = te_one(a, hd.order);
    c.coeffs[r] = fp::Vec(d);
    for (auto& x : c.coeffs[r]) x %= a.modulus();
    TruncatedElement cinv = te_inverse_unipotent(a, c);
    HigherDerivation out = hd_identity(a, hd.order);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        TruncatedElement alpha_e = te_zero(a, hd.order);
        for (std::size_t n = 0; n <= hd.order; ++n) alpha_e.coeffs[n] = hd.terms[n].col(i);
        TruncatedElement img = te_mul(a, te_mul(a, cinv, alpha_e), c);
        for (std::size_t n = 0; n <= hd.order; ++n)
            for (std::size_t row = 0; row < a.dim(); ++row)
                out.terms[n].set(row, i, img.coeffs[n][row]);
    }
    return out;
}

}  // namespace hh1::integrability
