#pragma once

#include <optional>
#include <vector>

namespace g2micro {

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    friend IntMat operator*(const IntMat& x, const IntMat& y);
    friend bool operator==(const IntMat& x, const IntMat& y);
    bool is_identity() const;
    IntMat pow(int k) const;
    std::vector<long long> apply(const std::vector<long long>& v) const;
};

// Elementary divisors d1 | d2 | ... including trailing zeros; entries non-negative.
std::vector<long long> smith_normal_form(IntMat m);

// u * a * v = d with u, v unimodular and d in Smith form.
struct SnfTransforms {
    IntMat d, u, v;
};
SnfTransforms smith_with_transforms(IntMat m);

// Solves a x = b over the integers. On success returns one solution and, if
// requested, a basis of the integer kernel of a.
std::optional<std::vector<long long>> solve_diophantine(const IntMat& a,
                                                        const std::vector<long long>& b,
                                                        std::vector<std::vector<long long>>* kernel = nullptr);

} // namespace g2micro
