#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hh1/fp.hpp"

// Finite-dimensional F_p-algebras given by structure constants. Structure
// constants are the single source of truth; group algebras, truncated
// polynomial rings and matrix algebras are conveniences that emit them.

namespace hh1::algebra {

constexpr std::size_t kHardDimCap = 64;

struct Violation {
    std::string kind;  // "associativity" or "unit"
    std::size_t i = 0, j = 0, k = 0;
    std::string describe() const;
};

class Algebra {
public:
    // table[(i*dim + j)*dim + k] is the e_k-coefficient of e_i * e_j.
    Algebra(uint32_t p, std::size_t dim, std::vector<std::string> labels,
            fp::Vec structure_constants, fp::Vec unit, std::size_t dim_cap = kHardDimCap);

    uint32_t modulus() const { return p_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const fp::Vec& unit() const { return unit_; }

    // coefficient vector of e_i * e_j
    fp::Vec product_of_basis(std::size_t i, std::size_t j) const;
    uint32_t structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    fp::Vec multiply(const fp::Vec& x, const fp::Vec& y) const;
    fp::Vec commutator(const fp::Vec& x, const fp::Vec& y) const;

    // matrix of y |-> x*y resp. y |-> y*x in the chosen basis
    fp::Matrix left_mult_operator(const fp::Vec& x) const;
    fp::Matrix right_mult_operator(const fp::Vec& x) const;
    // matrix of ad_x = [x, -]
    fp::Matrix ad_operator(const fp::Vec& x) const;

    std::string format_element(const fp::Vec& x) const;

    bool operator==(const Algebra& o) const = default;

private:
    uint32_t p_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    fp::Vec table_;  // dim^3 structure constants
    fp::Vec unit_;
};

// Empty iff associativity and unit laws hold on all basis triples/pairs.
std::vector<Violation> validate(const Algebra& a);

// Group algebra kG from a Cayley table of basis indices. The table is
// checked to be a group (closure is structural; identity, inverses,
// associativity are verified) and the failed axiom is named on error.
Algebra group_algebra(const std::vector<std::vector<std::size_t>>& cayley,
                      std::vector<std::string> labels, uint32_t p,
                      std::size_t dim_cap = kHardDimCap);

// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
Algebra truncated_poly(uint32_t p, std::size_t n, std::size_t dim_cap = kHardDimCap);

// M_m(A) with basis E_st (x) e_i, ordered by (s, t, i).
Algebra matrix_algebra(const Algebra& a, std::size_t m, std::size_t dim_cap = kHardDimCap);

// Canonical basis of the center {z : ze_i = e_i z for all i}.
std::vector<fp::Vec> center(const Algebra& a);

// True when every basis product is a single basis element and the unit is a
// basis element; then basis indices form a monoid (a group if constructed
// via group_algebra).
bool is_group_algebra_basis(const Algebra& a);
// index of the product g*h in a group-algebra basis
std::size_t basis_product_index(const Algebra& a, std::size_t g, std::size_t h);
std::size_t basis_identity_index(const Algebra& a);
std::size_t basis_inverse_index(const Algebra& a, std::size_t g);

}  // namespace hh1::algebra
