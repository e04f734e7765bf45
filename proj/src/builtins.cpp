#include "hh1/builtins.hpp"

namespace hh1::builtins {

std::vector<std::vector<std::size_t>> cyclic_cayley(std::size_t n) {
    if (n == 0 || n > 12) throw input_error("cyclic group order must be in [1, 12]");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return t;
}

std::vector<std::vector<std::size_t>> s3_cayley() {
    // 0=1, 1=(123), 2=(132), 3=(12), 4=(13), 5=(23)
    return {
        {0, 1, 2, 3, 4, 5},
        {1, 2, 0, 4, 5, 3},
        {2, 0, 1, 5, 3, 4},
        {3, 5, 4, 0, 2, 1},
        {4, 3, 5, 1, 0, 2},
        {5, 4, 3, 2, 1, 0},
    };
}

namespace {

std::vector<std::string> s3_labels() { return {"1", "(123)", "(132)", "(12)", "(13)", "(23)"}; }

std::vector<std::string> cyclic_labels(std::size_t n) {
    if (n == 3) return {"1", "(123)", "(132)"};
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    return l;
}

}  // namespace

bool is_builtin_name(const std::string& name) {
    if (name == "s3") return true;
    if (name.size() >= 2 && name[0] == 'c') {
        for (std::size_t i = 1; i < name.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(name[i]))) return false;
        std::size_t n = std::stoul(name.substr(1));
        return n >= 1 && n <= 12;
    }
    return false;
}

Algebra builtin_algebra(const std::string& name, uint32_t p, std::size_t dim_cap) {
    if (name == "s3") return algebra::group_algebra(s3_cayley(), s3_labels(), p, dim_cap);
    if (is_builtin_name(name)) {
        std::size_t n = std::stoul(name.substr(1));
        return algebra::group_algebra(cyclic_cayley(n), cyclic_labels(n), p, dim_cap);
    }
    throw input_error("unknown builtin algebra: " + name);
}

fp::Matrix c3_derivation(const std::string& name) {
    // determined by the image of (123); the image of (132) follows from
    // Leibniz: f((132)) = 2*(123)*f((123))
    fp::Vec image;
    if (name == "f0") image = {1, 0, 0};
    else if (name == "f1") image = {0, 1, 0};
    else if (name == "f2") image = {0, 0, 1};
    else throw input_error("unknown builtin derivation: " + name);
    Algebra c3 = builtin_algebra("c3", 3);
    fp::Matrix f(3, 3, 3);
    for (std::size_t r = 0; r < 3; ++r) f.set(r, 1, image[r]);
    fp::Vec g{0, 1, 0};
    fp::Vec im2 = fp::vec_scale(c3.multiply(g, image), 2, 3);
    for (std::size_t r = 0; r < 3; ++r) f.set(r, 2, im2[r]);
    return f;
}

S3OverC3 s3_over_c3() {
    return S3OverC3{
        builtin_algebra("s3", 3),
        builtin_algebra("c3", 3),
        {0, 1, 2},
        {0, 3},
    };
}

}  // namespace hh1::builtins
