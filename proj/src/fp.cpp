#include "hh1/fp.hpp"

namespace hh1::fp {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_modulus(uint32_t p) {
    if (p < 2 || p > kMaxModulus || !is_prime(p))
        throw input_error("modulus must be a prime in [2, 97], got " + std::to_string(p));
}

uint32_t pow(uint32_t a, uint64_t e, uint32_t p) {
    uint32_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

uint32_t inv(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw math_error("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2, p);
}

Vec vec_add(const Vec& a, const Vec& b, uint32_t p) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = add(a[i], b[i], p);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, uint32_t p) {
    if (a.size() != b.size()) throw input_error("vector dimension mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sub(a[i], b[i], p);
    return r;
}

Vec vec_scale(const Vec& a, uint32_t c, uint32_t p) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (uint32_t x : a)
        if (x) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, uint32_t p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    check_modulus(p);
}

Vec Matrix::row(std::size_t r) const {
    return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::identity(std::size_t n, uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, uint32_t p) {
    Matrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw input_error("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

bool Matrix::is_zero() const { return vec_is_zero(a_); }

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw input_error("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = add(a_[i], o.a_[i], p_);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw input_error("matrix shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = sub(a_[i], o.a_[i], p_);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || p_ != o.p_) throw input_error("matrix shape mismatch in product");
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            uint32_t aik = at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, add(r.at(i, j), mul(aik, o.at(k, j), p_), p_));
        }
    return r;
}

Matrix Matrix::scaled(uint32_t c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = mul(x, c, p_);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw input_error("vector dimension mismatch in apply");
    Vec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<uint64_t>(at(i, j)) * v[j];
        r[i] = static_cast<uint32_t>(acc % p_);
    }
    return r;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    const uint32_t p = m.modulus();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        // lowest-index pivot preference: first nonzero row at/below lead
        std::size_t piv = lead;
        while (piv < m.rows() && a.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                uint32_t tmp = a.at(lead, j);
                a.set(lead, j, a.at(piv, j));
                a.set(piv, j, tmp);
            }
        uint32_t s = inv(a.at(lead, c), p);
        for (std::size_t j = 0; j < m.cols(); ++j) a.set(lead, j, mul(a.at(lead, j), s, p));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            uint32_t f = a.at(r, c);
            if (!f) continue;
            for (std::size_t j = 0; j < m.cols(); ++j)
                a.set(r, j, sub(a.at(r, j), mul(f, a.at(lead, j), p), p));
        }
        res.pivot_columns.push_back(c);
        ++lead;
    }
    res.rank = res.pivot_columns.size();
    return res;
}

std::optional<SolveResult> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw input_error("solve: rhs dimension mismatch");
    const uint32_t p = a.modulus();
    Matrix aug(a.rows(), a.cols() + 1, p);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    RrefResult rr = rref(aug);
    for (std::size_t pc : rr.pivot_columns)
        if (pc == a.cols()) return std::nullopt;  // pivot in rhs column: inconsistent
    SolveResult out;
    out.particular.assign(a.cols(), 0);
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
        out.particular[rr.pivot_columns[i]] = rr.reduced.at(i, a.cols());
    out.kernel_basis = kernel(a);
    return out;
}

std::vector<Vec> kernel(const Matrix& a) {
    const uint32_t p = a.modulus();
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t pc : rr.pivot_columns) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(a.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i)
            v[rr.pivot_columns[i]] = neg(rr.reduced.at(i, f), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

Solver::Solver(const Matrix& a) : rows_(a.rows()), cols_(a.cols()), p_(a.modulus()) {
    // reduce [a | I]; the left block becomes rref(a) (the identity columns
    // come last, so pivot selection never mixes the blocks for the first
    // rank(a) pivots) and the right block records the row operations
    Matrix aug(rows_, cols_ + rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.set(r, c, a.at(r, c));
        aug.set(r, cols_ + r, 1);
    }
    RrefResult rr = rref(aug);
    for (std::size_t pc : rr.pivot_columns)
        if (pc < cols_) pivot_columns_.push_back(pc);
    transform_ = Matrix(rows_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < rows_; ++c) transform_.set(r, c, rr.reduced.at(r, cols_ + c));
    kernel_ = kernel(a);
}

std::optional<Vec> Solver::particular(const Vec& b) const {
    if (b.size() != rows_) throw input_error("solve: rhs dimension mismatch");
    Vec y = transform_.apply(b);
    for (std::size_t r = pivot_columns_.size(); r < rows_; ++r)
        if (y[r]) return std::nullopt;
    Vec x(cols_, 0);
    for (std::size_t i = 0; i < pivot_columns_.size(); ++i) x[pivot_columns_[i]] = y[i];
    return x;
}

Vec coset_reduce(const std::vector<Vec>& subspace_basis, Vec v, uint32_t p) {
    if (subspace_basis.empty()) return v;
    Matrix s = Matrix::from_rows(subspace_basis, v.size(), p);
    RrefResult rr = rref(s);
    for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
        uint32_t f = v[rr.pivot_columns[i]];
        if (!f) continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = sub(v[j], mul(f, rr.reduced.at(i, j), p), p);
    }
    return v;
}

}  // namespace hh1::fp
