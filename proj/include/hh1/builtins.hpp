#pragma once

#include "hh1/transfer.hpp"

// Built-in Cayley tables (C_n for n <= 12 and S_3), the standard kC_3
// derivations f0/f1/f2, and the s3_over_c3 bimodule setup.

namespace hh1::builtins {

using algebra::Algebra;

std::vector<std::vector<std::size_t>> cyclic_cayley(std::size_t n);

// S_3 with basis order 1, (123), (132), (12), (13), (23) and right-to-left
// composition, so that (12)(123) = (23). The convention is frozen by the
// requirement that the transfer values of the s3_over_c3 setup match the
// known evaluations; see the transfer tests.
std::vector<std::vector<std::size_t>> s3_cayley();

// Builtin names: "s3", or "cN" for 1 <= N <= 12.
bool is_builtin_name(const std::string& name);
Algebra builtin_algebra(const std::string& name, uint32_t p,
                        std::size_t dim_cap = algebra::kHardDimCap);

// f0((123)) = 1, f1((123)) = (123), f2((123)) = (132) on kC_3, p = 3.
fp::Matrix c3_derivation(const std::string& name);

struct S3OverC3 {
    Algebra big;   // F_3 S_3
    Algebra sub;   // F_3 C_3
    std::vector<std::size_t> embedding;
    std::vector<std::size_t> coset_reps;  // {1, (12)}
    transfer::GroupBimoduleSetup view() const { return {&big, &sub, embedding, coset_reps}; }
};

S3OverC3 s3_over_c3();

}  // namespace hh1::builtins
