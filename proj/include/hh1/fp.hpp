#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact dense linear algebra over prime fields F_p, 2 <= p <= 97.
// All canonical forms flow through RREF with lowest-index pivot preference.

namespace hh1 {

// Structural / argument problems (bad dimensions, non-prime modulus, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated mathematical preconditions (non-derivation input, ...).
struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace fp {

constexpr uint32_t kMaxModulus = 97;

bool is_prime(uint32_t p);
void check_modulus(uint32_t p);

inline uint32_t add(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
inline uint32_t sub(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b) % p; }
inline uint32_t mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
inline uint32_t neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
uint32_t inv(uint32_t a, uint32_t p);
uint32_t pow(uint32_t a, uint64_t e, uint32_t p);

// Residue with its modulus attached; used at API boundaries.
struct Scalar {
    uint32_t value = 0;
    uint32_t p = 2;

    Scalar() = default;
    Scalar(uint32_t v, uint32_t modulus) : value(v % modulus), p(modulus) { check_modulus(modulus); }
};

using Vec = std::vector<uint32_t>;

Vec vec_add(const Vec& a, const Vec& b, uint32_t p);
Vec vec_sub(const Vec& a, const Vec& b, uint32_t p);
Vec vec_scale(const Vec& a, uint32_t c, uint32_t p);
bool vec_is_zero(const Vec& a);

// Dense row-major matrix over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    uint32_t modulus() const { return p_; }

    uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, uint32_t v) { a_[r * cols_ + c] = v % p_; }

    const Vec& data() const { return a_; }
    Vec& data() { return a_; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    static Matrix identity(std::size_t n, uint32_t p);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, uint32_t p);

    bool is_zero() const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;  // matrix product
    Matrix scaled(uint32_t c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    uint32_t p_ = 2;
    Vec a_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;  // strictly increasing
    std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

struct SolveResult {
    Vec particular;
    std::vector<Vec> kernel_basis;
};

// Solves a * x = b. Returns nullopt when inconsistent.
std::optional<SolveResult> solve(const Matrix& a, const Vec& b);

// Canonical basis of the null space, from RREF free columns in order.
std::vector<Vec> kernel(const Matrix& a);

// Factored form of a matrix for repeated solves against varying right-hand
// sides. Produces exactly the same particular solution and kernel basis as
// solve()/kernel(); the row reduction is done once at construction.
class Solver {
public:
    explicit Solver(const Matrix& a);

    std::optional<Vec> particular(const Vec& b) const;  // nullopt when inconsistent
    const std::vector<Vec>& kernel_basis() const { return kernel_; }
    std::size_t rank() const { return pivot_columns_.size(); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    uint32_t p_ = 2;
    Matrix transform_;  // row-op matrix T with T*a in RREF
    std::vector<std::size_t> pivot_columns_;
    std::vector<Vec> kernel_;
};

// Unique canonical representative of v + span(subspace_basis): RREF the
// subspace, then eliminate v's coordinates at the pivot columns.
Vec coset_reduce(const std::vector<Vec>& subspace_basis, Vec v, uint32_t p);

}  // namespace fp
}  // namespace hh1
