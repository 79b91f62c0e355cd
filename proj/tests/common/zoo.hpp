#pragma once

// Small algebras and randomized module generators shared by the unit and
// acceptance suites.

#include <random>

#include "hcb/algebra.hpp"
#include "hcb/ext.hpp"

namespace hcb::zoo {

inline std::vector<std::vector<SVec>> empty_table(int n) {
    return std::vector<std::vector<SVec>>(n, std::vector<SVec>(n));
}

inline AlgebraPtr field_k() {
    auto t = empty_table(1);
    t[0][0] = {{0, Rat(1)}};
    return make_algebra({"1"}, {Rat(1)}, t);
}

inline AlgebraPtr k_times_k() {
    auto t = empty_table(2);
    t[0][0] = {{0, Rat(1)}};
    t[1][1] = {{1, Rat(1)}};
    return make_algebra({"e1", "e2"}, {Rat(1), Rat(1)}, t);
}

// Basis E11, E12, E22.
inline AlgebraPtr upper_triangular2() {
    auto t = empty_table(3);
    t[0][0] = {{0, Rat(1)}};  // E11 E11
    t[0][1] = {{1, Rat(1)}};  // E11 E12
    t[1][2] = {{1, Rat(1)}};  // E12 E22
    t[2][2] = {{2, Rat(1)}};  // E22 E22
    return make_algebra({"E11", "E12", "E22"}, {Rat(1), Rat(0), Rat(1)}, t);
}

// Basis E11, E12, E21, E22.
inline AlgebraPtr mat2() {
    auto idx = [](int i, int j) { return 2 * i + j; };
    auto t = empty_table(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) t[idx(i, j)][idx(k, l)] = {{idx(i, l), Rat(1)}};
    return make_algebra({"E11", "E12", "E21", "E22"},
                        {Rat(1), Rat(0), Rat(0), Rat(1)}, t);
}

// k[x]/(x^n), basis 1, x, ..., x^(n-1).
inline AlgebraPtr kx_mod(int n) {
    auto t = empty_table(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) t[i][j] = {{i + j, Rat(1)}};
    std::vector<std::string> names;
    Vec unit(n, Rat(0));
    unit[0] = 1;
    for (int i = 0; i < n; ++i) names.push_back("x^" + std::to_string(i));
    return make_algebra(std::move(names), std::move(unit), t);
}

// k[x]/(x^2) x k: a 3-dim algebra with a nilpotent and a split point.
inline AlgebraPtr dual_numbers_times_k() {
    auto t = empty_table(3);
    t[0][0] = {{0, Rat(1)}};
    t[0][1] = {{1, Rat(1)}};
    t[1][0] = {{1, Rat(1)}};
    t[2][2] = {{2, Rat(1)}};
    return make_algebra({"1a", "xa", "1b"}, {Rat(1), Rat(0), Rat(1)}, t);
}

inline Rat random_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    return Rat(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, int n) {
    Vec v(n);
    for (auto& x : v) x = random_rat(rng);
    return v;
}

// Random module of dimension <= maxdim: a spun submodule of a small free
// module, optionally quotiented by a spun submodule of itself.
inline Module random_module(const AlgebraPtr& a, std::mt19937_64& rng, int maxdim) {
    int copies = 2;
    Module freem{a, Side::Left, a->dim * copies, {}};
    for (int i = 0; i < a->dim; ++i) {
        Vec e(a->dim, Rat(0));
        e[i] = 1;
        RMat l = a->left_mult(e);
        RMat big(freem.dim, freem.dim);
        for (int c = 0; c < copies; ++c)
            for (int r = 0; r < a->dim; ++r)
                for (int s = 0; s < a->dim; ++s)
                    big.at(c * a->dim + r, c * a->dim + s) = l.at(r, s);
        freem.act.push_back(std::move(big));
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<int> nseeds(1, 2);
        std::vector<Vec> seeds;
        for (int s = nseeds(rng); s > 0; --s) seeds.push_back(random_vec(rng, freem.dim));
        RSub sub = spin(freem, seeds);
        if (sub.dim() == 0) continue;
        Module m = submodule(freem, sub);
        if (attempt % 2 == 1 && m.dim > 1) {
            RSub inner = spin(m, {random_vec(rng, m.dim)});
            if (inner.dim() > 0 && inner.dim() < m.dim)
                m = quotient_module(m, inner).mod;
        }
        if (m.dim > 0 && m.dim <= maxdim) return m;
    }
    // Fall back to a simple-minded quotient of the regular module.
    return regular_module(a, Side::Left);
}

}  // namespace hcb::zoo
