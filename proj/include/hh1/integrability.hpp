#pragma once

#include "hh1/hochschild.hpp"

// Truncated higher derivations: the group law, powers, the closed-form term
// formula, the r-integrability search and truncated conjugation. Everything
// lives in A[t]/t^{N+1} for an explicit truncation order N.

namespace hh1::integrability {

using algebra::Algebra;
using hochschild::HH1Class;
using hochschild::LinearEndo;

// D_0 = Id and Leibniz to order N: D_n(e_i e_j) = sum_{a+b=n} D_a(e_i) D_b(e_j).
struct HigherDerivation {
    std::size_t order = 0;            // N >= 1
    std::vector<LinearEndo> terms;    // D_0 ... D_N
};

// Element sum a_i t^i of A[t]/t^{N+1}.
struct TruncatedElement {
    std::size_t order = 0;
    std::vector<fp::Vec> coeffs;  // a_0 ... a_N
};

HigherDerivation hd_identity(const Algebra& a, std::size_t order);

// Independent Leibniz re-checker (also verifies D_0 = Id).
bool hd_is_valid(const Algebra& a, const HigherDerivation& u);

// Smallest i >= 1 with D_i != 0; nullopt when identity to order N.
std::optional<std::size_t> leading_index(const HigherDerivation& u);

HigherDerivation hd_compose(const Algebra& a, const HigherDerivation& u,
                            const HigherDerivation& v);
HigherDerivation hd_inverse(const Algebra& a, const HigherDerivation& u);
HigherDerivation hd_power(const Algebra& a, const HigherDerivation& u, std::size_t n);

// Closed-form term at t^l of (sum_i D_i t^i)^n:
//   sum_{c=1..l} C(n,c) sum_{i_1+...+i_c=l, i_j>=1} D_{i_1} o ... o D_{i_c};
// independent oracle for hd_power.
LinearEndo hd_term_formula(const Algebra& a, const HigherDerivation& u, std::size_t n,
                           std::size_t l);

struct IntegrationOutcome {
    std::optional<HigherDerivation> integrated;
    std::size_t obstructed_degree = 0;   // first failing degree of the last branch
    std::size_t branches_explored = 0;
    bool hit_branch_limit = false;
};

// Depth-first search for D_{r+1} ... D_N extending D_r = d, canonical coset
// representative first, branching over Der(A)-translates in RREF basis order.
IntegrationOutcome integrate(const Algebra& a, const LinearEndo& d, std::size_t r,
                             std::size_t order, std::size_t branch_limit = 1000);

struct Hh1rResult {
    std::vector<HH1Class> classes;
    bool exact = true;  // false: some integrate call hit the branch limit
};

// Span of HH^1 classes with a representative integrable to order N, computed
// by integrating a spanning set of Der(A).
Hh1rResult hh1_r(const Algebra& a, std::size_t r, std::size_t order,
                 std::size_t branch_limit = 1000);

// Truncated element arithmetic.
TruncatedElement te_zero(const Algebra& a, std::size_t order);
TruncatedElement te_one(const Algebra& a, std::size_t order);
TruncatedElement te_add(const Algebra& a, const TruncatedElement& u, const TruncatedElement& v);
TruncatedElement te_mul(const Algebra& a, const TruncatedElement& u, const TruncatedElement& v);
// Inverse of a truncated element whose constant coefficient is the unit.
TruncatedElement te_inverse_unipotent(const Algebra& a, const TruncatedElement& u);

// The higher derivation a |-> c a c^{-1} for a unipotent truncated unit c.
HigherDerivation conjugation_hd(const Algebra& a, const TruncatedElement& c);

// a |-> c^{-1} alpha(a) c with c = 1 + t^r d; when D_r = ad_d the leading
// index strictly increases.
HigherDerivation conj_adjust(const Algebra& a, const HigherDerivation& hd, const fp::Vec& d,
                             std::size_t r);

}  // namespace hh1::integrability
