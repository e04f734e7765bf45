#pragma once

#include "hh1/hochschild.hpp"

// Group-algebra bimodule setups, the symmetrizing bilinear form, the
// two-coset transfer map, inner-derivation solvability and the Morita
// induced map on HH^1.

namespace hh1::transfer {

using algebra::Algebra;
using hochschild::HH1Class;
using hochschild::LinearEndo;

// kG together with a subgroup algebra kH, an embedding of basis indices and
// left coset representatives with G = union of s*H.
struct GroupBimoduleSetup {
    const Algebra* big = nullptr;   // kG
    const Algebra* sub = nullptr;   // kH
    std::vector<std::size_t> embedding;   // H-basis index -> G-basis index
    std::vector<std::size_t> coset_reps;  // G-basis indices, coset_reps[0] = identity
};

// Checks both algebras are group algebras, the embedding is multiplicative
// and (s, h) |-> s*h is a bijection onto G.
void validate_setup(const GroupBimoduleSetup& setup);

// Bilinear extension of <g, h> = 1 if gh = identity else 0.
fp::Scalar symmetrizing_form(const Algebra& a, const fp::Vec& x, const fp::Vec& y);

// phi_s: linear with phi_s(s*h) = h for h in H and 0 off the coset s*H.
fp::Vec dual_basis_projection(const GroupBimoduleSetup& setup, std::size_t s, const fp::Vec& x);

// The printed two-coset transfer formula. f is a linear endomorphism of the
// subalgebra; the result acts on the big algebra. tr(f) is not assumed to be
// a derivation.
LinearEndo transfer_map(const GroupBimoduleSetup& setup, const LinearEndo& f);

struct InnerSolveOutcome {
    std::optional<fp::Vec> witness;
    bool has_solution() const { return witness.has_value(); }
};

// Decides solvability of the simultaneous system [x, g_i] = v_i over x in A.
InnerSolveOutcome is_inner(const Algebra& a,
                           const std::vector<std::pair<fp::Vec, fp::Vec>>& constraints);

struct DiscrepancyReport {
    LinearEndo tr_of_ppower;   // tr(f^p)
    LinearEndo ppower_of_tr;   // (tr f)^p, plain p-fold composition
    LinearEndo delta;          // (tr f)^p - tr(f^p)
    bool tr_f_is_derivation = false;
    bool delta_is_inner = false;       // delta = ad_x solvable
    bool commutes = false;             // delta vanishes modulo inner derivations
};

DiscrepancyReport ppower_transfer_discrepancy(const GroupBimoduleSetup& setup,
                                              const LinearEndo& f);

// D (x) Id on M_m(A), canonicalized as a class of matrix_algebra(a, m).
HH1Class morita_induced_class_map(const Algebra& a, const Algebra& mat, std::size_t m,
                                  const HH1Class& x);
LinearEndo morita_extend(const Algebra& a, const Algebra& mat, std::size_t m,
                         const LinearEndo& d);

}  // namespace hh1::transfer
