#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hcb/rational.hpp"

namespace hcb {

// Dense row-major matrix over an exact field F (Rat or Fp<P>).
template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, F(0)) {}

    F& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const F& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    std::vector<F> row(int r) const {
        return std::vector<F>(a.begin() + static_cast<std::size_t>(r) * cols,
                              a.begin() + static_cast<std::size_t>(r + 1) * cols);
    }
};

template <class F>
Mat<F> mat_mul(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw Error("mat_mul: shape mismatch");
    Mat<F> z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const F& v = x.at(i, k);
            if (v == F(0)) continue;
            for (int j = 0; j < y.cols; ++j) {
                const F& w = y.at(k, j);
                if (!(w == F(0))) z.at(i, j) += v * w;
            }
        }
    return z;
}

template <class F>
std::vector<F> mat_apply(const Mat<F>& m, const std::vector<F>& v) {
    if (m.cols != static_cast<int>(v.size())) throw Error("mat_apply: shape mismatch");
    std::vector<F> out(m.rows, F(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!(m.at(i, j) == F(0)) && !(v[j] == F(0))) out[i] += m.at(i, j) * v[j];
    return out;
}

template <class F>
Mat<F> mat_add(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw Error("mat_add: shape mismatch");
    Mat<F> z = x;
    for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

template <class F>
Mat<F> mat_scale(const Mat<F>& x, const F& c) {
    Mat<F> z = x;
    for (auto& v : z.a) v *= c;
    return z;
}

template <class F>
Mat<F> transpose(const Mat<F>& m) {
    Mat<F> t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

// Reduced row echelon form.  Pivot choice is the first nonzero entry in
// column order, so the result is the unique canonical RREF.
template <class F>
std::pair<Mat<F>, std::vector<int>> rref(Mat<F> m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (!(m.at(i, c) == F(0))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        F inv = F(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            F f = m.at(i, c);
            if (f == F(0)) continue;
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class F>
int rank(const Mat<F>& m) {
    return static_cast<int>(rref(m).second.size());
}

// Canonical basis of {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> kernel(const Mat<F>& m) {
    auto [r, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(m.cols, F(0));
        v[c] = F(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(static_cast<int>(i), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One particular solution of m x = b, if any.
template <class F>
std::optional<std::vector<F>> solve(const Mat<F>& m, const std::vector<F>& b) {
    if (m.rows != static_cast<int>(b.size())) throw Error("solve: shape mismatch");
    Mat<F> aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto [r, piv] = rref(std::move(aug));
    std::vector<F> x(m.cols, F(0));
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == m.cols) return std::nullopt;  // row (0 ... 0 | 1)
        x[piv[i]] = r.at(static_cast<int>(i), m.cols);
    }
    return x;
}

}  // namespace hcb
