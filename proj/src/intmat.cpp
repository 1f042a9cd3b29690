#include "g2micro/intmat.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace g2micro {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix dimension mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            long long v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}

bool IntMat::is_identity() const {
    if (rows != cols) return false;
    return *this == identity(rows);
}

IntMat IntMat::pow(int k) const {
    IntMat r = identity(rows);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::vector<long long> IntMat::apply(const std::vector<long long>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("vector dimension mismatch");
    std::vector<long long> r(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

void swap_rows(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// row[i] += f * row[j]
void add_row(IntMat& m, int i, int j, long long f) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) += f * m.at(j, c);
}

void add_col(IntMat& m, int i, int j, long long f) {
    for (int r = 0; r < m.rows; ++r) m.at(r, i) += f * m.at(r, j);
}

void negate_row(IntMat& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

} // namespace

SnfTransforms smith_with_transforms(IntMat m) {
    SnfTransforms t;
    t.u = IntMat::identity(m.rows);
    t.v = IntMat::identity(m.cols);
    int n = std::min(m.rows, m.cols);
    for (int s = 0; s < n; ++s) {
        // pivot: smallest nonzero absolute value in the trailing block
        int pr = -1, pc = -1;
        long long best = 0;
        for (int i = s; i < m.rows; ++i)
            for (int j = s; j < m.cols; ++j) {
                long long v = std::llabs(m.at(i, j));
                if (v != 0 && (best == 0 || v < best)) { best = v; pr = i; pc = j; }
            }
        if (pr < 0) break;
        if (pr != s) { swap_rows(m, s, pr); swap_rows(t.u, s, pr); }
        if (pc != s) { swap_cols(m, s, pc); swap_cols(t.v, s, pc); }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (int i = s + 1; i < m.rows; ++i) {
                long long q = m.at(i, s) / m.at(s, s);
                if (q != 0) { add_row(m, i, s, -q); add_row(t.u, i, s, -q); }
                if (m.at(i, s) != 0) {
                    // remainder smaller than pivot: swap up and restart
                    swap_rows(m, s, i); swap_rows(t.u, s, i);
                    dirty = true;
                }
            }
            for (int j = s + 1; j < m.cols; ++j) {
                long long q = m.at(s, j) / m.at(s, s);
                if (q != 0) { add_col(m, j, s, -q); add_col(t.v, j, s, -q); }
                if (m.at(s, j) != 0) {
                    swap_cols(m, s, j); swap_cols(t.v, s, j);
                    dirty = true;
                }
            }
        }
        // enforce divisibility d_s | d_{s+1..}
        for (int i = s + 1; i < m.rows; ++i)
            for (int j = s + 1; j < m.cols; ++j)
                if (m.at(i, j) % m.at(s, s) != 0) {
                    add_row(m, s, i, 1); add_row(t.u, s, i, 1);
                    s -= 1;
                    goto next_pivot;
                }
        if (m.at(s, s) < 0) { negate_row(m, s); negate_row(t.u, s); }
    next_pivot:;
    }
    t.d = std::move(m);
    return t;
}

std::vector<long long> smith_normal_form(IntMat m) {
    SnfTransforms t = smith_with_transforms(std::move(m));
    int n = std::min(t.d.rows, t.d.cols);
    std::vector<long long> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = t.d.at(i, i);
    return diag;
}

std::optional<std::vector<long long>> solve_diophantine(const IntMat& a,
                                                        const std::vector<long long>& b,
                                                        std::vector<std::vector<long long>>* kernel) {
    assert(static_cast<int>(b.size()) == a.rows);
    SnfTransforms t = smith_with_transforms(a);
    std::vector<long long> ub = t.u.apply(b);
    int n = std::min(a.rows, a.cols);
    std::vector<long long> y(a.cols, 0);
    for (int i = 0; i < a.rows; ++i) {
        long long d = i < n ? t.d.at(i, i) : 0;
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    std::vector<long long> x(a.cols, 0);
    for (int i = 0; i < a.cols; ++i)
        for (int j = 0; j < a.cols; ++j) x[i] += t.v.at(i, j) * y[j];
    if (kernel) {
        kernel->clear();
        for (int j = 0; j < a.cols; ++j) {
            bool free_col = j >= n || t.d.at(j, j) == 0;
            if (!free_col) continue;
            std::vector<long long> k(a.cols);
            for (int i = 0; i < a.cols; ++i) k[i] = t.v.at(i, j);
            kernel->push_back(std::move(k));
        }
    }
    return x;
}

} // namespace g2micro
