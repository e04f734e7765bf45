#pragma once

#include "hh1/algebra.hpp"

// Der(A), Inn(A), HH^1(A) with canonical class representatives, the Lie
// bracket and the p-power map. Linear endomorphisms are dim x dim matrices
// acting on coefficient vectors; column j holds the image of e_j.

namespace hh1::hochschild {

using algebra::Algebra;
using LinearEndo = fp::Matrix;

bool is_derivation(const Algebra& a, const LinearEndo& f);

// Names the first basis pair on which Leibniz fails, if any.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_witness(const Algebra& a,
                                                                   const LinearEndo& f);

// The dim^3 x dim^2 Leibniz system whose kernel is Der(A); unknowns are the
// endomorphism entries flattened row-major.
fp::Matrix leibniz_operator(const Algebra& a);

std::vector<LinearEndo> derivation_space(const Algebra& a);
std::vector<LinearEndo> inner_derivations(const Algebra& a);

// Flattened matrices of the inner-derivation basis, for coset reduction.
std::vector<fp::Vec> inner_subspace(const Algebra& a);

// Canonical coset representative of a derivation modulo Inn(A). Class
// equality is bitwise equality of the representative matrix.
struct HH1Class {
    LinearEndo representative;
    bool operator==(const HH1Class& o) const = default;
    bool is_zero() const { return representative.is_zero(); }
};

HH1Class class_of(const Algebra& a, const LinearEndo& d);
std::vector<HH1Class> hh1_basis(const Algebra& a);

LinearEndo bracket(const Algebra& a, const LinearEndo& d, const LinearEndo& e);
HH1Class bracket_classes(const Algebra& a, const HH1Class& x, const HH1Class& y);

// Literal p-fold composition, per definition.
LinearEndo p_power(const Algebra& a, const LinearEndo& d);
HH1Class p_power_class(const Algebra& a, const HH1Class& x);

fp::Vec flatten(const LinearEndo& m);
LinearEndo unflatten(const fp::Vec& v, std::size_t dim, uint32_t p);

}  // namespace hh1::hochschild
