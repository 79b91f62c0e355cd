#pragma once

#include <vector>

#include "hcb/matrix.hpp"

namespace hcb {

// Subspace of F^ambient stored as the unique reduced-echelon basis, so two
// subspaces are equal as sets iff their representations are equal.
template <class F>
struct Subspace {
    int ambient = 0;
    std::vector<std::vector<F>> basis;  // RREF rows, no zero rows

    Subspace() = default;
    explicit Subspace(int amb) : ambient(amb) {}

    int dim() const { return static_cast<int>(basis.size()); }
    bool is_zero() const { return basis.empty(); }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
};

template <class F>
bool operator<(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.basis.size() != b.basis.size()) return a.basis.size() < b.basis.size();
    for (std::size_t i = 0; i < a.basis.size(); ++i)
        for (std::size_t j = 0; j < a.basis[i].size(); ++j) {
            if (a.basis[i][j] == b.basis[i][j]) continue;
            return a.basis[i][j] < b.basis[i][j];
        }
    return false;
}

template <class F>
Subspace<F> span_of(int ambient, const std::vector<std::vector<F>>& vecs) {
    for (const auto& v : vecs)
        if (static_cast<int>(v.size()) != ambient) throw Error("span_of: ambient mismatch");
    Mat<F> m(static_cast<int>(vecs.size()), ambient);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < ambient; ++j) m.at(i, j) = vecs[i][j];
    auto [r, piv] = rref(std::move(m));
    Subspace<F> s(ambient);
    for (std::size_t i = 0; i < piv.size(); ++i) s.basis.push_back(r.row(static_cast<int>(i)));
    return s;
}

template <class F>
Subspace<F> full_space(int ambient) {
    Subspace<F> s(ambient);
    for (int i = 0; i < ambient; ++i) {
        std::vector<F> v(ambient, F(0));
        v[i] = F(1);
        s.basis.push_back(std::move(v));
    }
    return s;
}

template <class F>
bool contains(const Subspace<F>& s, const std::vector<F>& v) {
    // Reduce v against the echelon basis.
    std::vector<F> w = v;
    for (const auto& row : s.basis) {
        int lead = 0;
        while (lead < s.ambient && row[lead] == F(0)) ++lead;
        if (lead >= s.ambient) continue;
        if (w[lead] == F(0)) continue;
        F f = w[lead];
        for (int j = 0; j < s.ambient; ++j) w[j] -= f * row[j];
    }
    for (const auto& x : w)
        if (!(x == F(0))) return false;
    return true;
}

template <class F>
bool contains(const Subspace<F>& outer, const Subspace<F>& inner) {
    for (const auto& v : inner.basis)
        if (!contains(outer, v)) return false;
    return true;
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient != v.ambient) throw Error("subspace_sum: ambient mismatch");
    auto vecs = u.basis;
    vecs.insert(vecs.end(), v.basis.begin(), v.basis.end());
    return span_of(u.ambient, vecs);
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& v) {
    if (u.ambient != v.ambient) throw Error("subspace_intersect: ambient mismatch");
    // x in U∩V written x = a^T U = b^T V; solve [U^T | -V^T](a;b) = 0.
    int du = u.dim(), dv = v.dim();
    Mat<F> m(u.ambient, du + dv);
    for (int j = 0; j < du; ++j)
        for (int i = 0; i < u.ambient; ++i) m.at(i, j) = u.basis[j][i];
    for (int j = 0; j < dv; ++j)
        for (int i = 0; i < u.ambient; ++i) m.at(i, du + j) = -v.basis[j][i];
    std::vector<std::vector<F>> vecs;
    for (const auto& sol : kernel(m)) {
        std::vector<F> x(u.ambient, F(0));
        for (int j = 0; j < du; ++j)
            if (!(sol[j] == F(0)))
                for (int i = 0; i < u.ambient; ++i) x[i] += sol[j] * u.basis[j][i];
        vecs.push_back(std::move(x));
    }
    return span_of(u.ambient, vecs);
}

// Coset representatives for w/u (u ⊆ w required): the basis rows of w whose
// pivots are not pivots of u, reduced canonically.
template <class F>
std::vector<std::vector<F>> quotient_basis(const Subspace<F>& w, const Subspace<F>& u) {
    if (w.ambient != u.ambient) throw Error("quotient_basis: ambient mismatch");
    if (!contains(w, u)) throw Error("quotient_basis: u is not contained in w");
    std::vector<std::vector<F>> reps;
    Subspace<F> acc = u;
    for (const auto& row : w.basis) {
        if (contains(acc, row)) continue;
        reps.push_back(row);
        auto vecs = acc.basis;
        vecs.push_back(row);
        acc = span_of(w.ambient, vecs);
    }
    return reps;
}

// Canonical complement of u inside w: greedy completion of u's basis by
// rows of w (so complement ⊕ u = w).
template <class F>
Subspace<F> complement_in(const Subspace<F>& w, const Subspace<F>& u) {
    return span_of(w.ambient, quotient_basis(w, u));
}

}  // namespace hcb
