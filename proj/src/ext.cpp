#include "hcb/ext.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hcb {

int ext1_dim(const AlgebraPtr& a, const MaxIdeal& s, const MaxIdeal& t) {
    if (s.simple.alg != a || t.simple.alg != a) throw Error("ext1_dim: algebra mismatch");
    int d = a->dim, ds = s.simple.dim, dt = t.simple.dim;
    int blk = dt * ds;  // one unknown block per algebra basis element
    int n = d * blk;
    // Cocycles: f(e_i e_j) = rho_t(e_i) f(e_j) + f(e_i) rho_s(e_j).
    std::vector<RMat> cons;
    for (int i = 0; i < d; ++i) {
        RMat c(blk * d, n);
        for (int j = 0; j < d; ++j) {
            for (int r = 0; r < dt; ++r)
                for (int col = 0; col < ds; ++col) {
                    int row = j * blk + r * ds + col;
                    for (const auto& [k, ck] : a->mult[i][j])
                        c.at(row, k * blk + r * ds + col) += ck;
                    for (int p = 0; p < dt; ++p)
                        c.at(row, j * blk + p * ds + col) -= t.simple.act[i].at(r, p);
                    for (int q = 0; q < ds; ++q)
                        c.at(row, i * blk + r * ds + q) -= s.simple.act[j].at(q, col);
                }
        }
        cons.push_back(std::move(c));
    }
    int cocycles = constrained_kernel(n, cons).dim();
    int homs = static_cast<int>(hom_space(s.simple, t.simple).size());
    int coboundaries = dt * ds - homs;
    return cocycles - coboundaries;
}

ExtQuiver ext_quiver(const AlgebraPtr& a, const std::vector<MaxIdeal>& simples) {
    ExtQuiver q;
    q.n = static_cast<int>(simples.size());
    q.edge_dims.assign(q.n, std::vector<int>(q.n, 0));
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j) q.edge_dims[i][j] = ext1_dim(a, simples[i], simples[j]);
    return q;
}

Relation equality_relation(int n) {
    Relation r;
    r.kind = Relation::Kind::Equality;
    for (int i = 0; i < n; ++i) r.classes.push_back({i});
    r.class_of.resize(n);
    std::iota(r.class_of.begin(), r.class_of.end(), 0);
    return r;
}

static Relation normalize_classes(std::vector<std::vector<int>> classes, int n,
                                  Relation::Kind kind) {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
    Relation r;
    r.kind = kind;
    r.classes = std::move(classes);
    r.class_of.assign(n, -1);
    for (int c = 0; c < static_cast<int>(r.classes.size()); ++c)
        for (int v : r.classes[c]) {
            if (v < 0 || v >= n || r.class_of[v] != -1)
                throw Error("relation: classes do not partition the vertex set");
            r.class_of[v] = c;
        }
    for (int v = 0; v < n; ++v)
        if (r.class_of[v] == -1) throw Error("relation: classes do not partition the vertex set");
    return r;
}

Relation user_relation(std::vector<std::vector<int>> classes, int n) {
    return normalize_classes(std::move(classes), n, Relation::Kind::User);
}

Relation ext_relation(const ExtQuiver& q) {
    std::vector<int> parent(q.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            if (i != j && (q.edge_dims[i][j] > 0 || q.edge_dims[j][i] > 0))
                parent[find(i)] = find(j);
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < q.n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& [_, g] : groups) classes.push_back(g);
    return normalize_classes(std::move(classes), q.n, Relation::Kind::Ext);
}

bool refines(const Relation& fine, const Relation& rel) {
    if (fine.size() != rel.size()) return false;
    for (const auto& c : fine.classes) {
        int target = rel.class_of[c.front()];
        for (int v : c)
            if (rel.class_of[v] != target) return false;
    }
    return true;
}

IdealWord make_word(const AlgebraPtr& a, const std::vector<MaxIdeal>& simples,
                    const Relation& rel, std::vector<int> factors) {
    IdealWord w;
    w.factors = std::move(factors);
    w.space = unit_ideal(a);
    for (int f : w.factors) {
        if (f < 0 || f >= static_cast<int>(simples.size()))
            throw Error("ideal word: factor index out of range");
        if (w.block == -1) w.block = rel.class_of[f];
        if (rel.class_of[f] != w.block)
            throw Error("ideal word: factors span multiple blocks");
        w.space = ideal_product(w.space, simples[f].ideal);
    }
    return w;
}

RSub word_image(const Module& v, const RSub& sub, const std::vector<int>& factors,
                const std::vector<MaxIdeal>& simples) {
    // Left: m1 ... mk . S applies the rightmost factor first; right mirrors.
    std::vector<int> order = factors;
    if (v.side == Side::Left) std::reverse(order.begin(), order.end());
    RSub img = sub;
    for (int f : order) {
        std::vector<Vec> vecs;
        for (const auto& x : simples[f].ideal.space.basis) {
            RMat ax = v.act_of(x);
            for (const auto& b : img.basis) vecs.push_back(mat_apply(ax, b));
        }
        img = span_of(v.dim, vecs);
    }
    return img;
}

// {w : x w in sub for all x in the ideal} via the linear reducer.
static RSub preimage_under_ideal(const Module& v, const RSub& sub, const Ideal& ideal) {
    RMat reducer(v.dim, v.dim);
    for (int j = 0; j < v.dim; ++j) {
        Vec e(v.dim, Rat(0));
        e[j] = 1;
        Vec r = reduce_mod(sub, e);
        for (int i = 0; i < v.dim; ++i) reducer.at(i, j) = r[i];
    }
    std::vector<RMat> cons;
    for (const auto& x : ideal.space.basis) cons.push_back(mat_mul(reducer, v.act_of(x)));
    return constrained_kernel(v.dim, cons);
}

RSub block_space(const Module& v, int cls, const Relation& rel,
                 const std::vector<MaxIdeal>& simples) {
    if (cls < 0 || cls >= rel.num_classes()) throw Error("block_space: no such class");
    RSub w(v.dim);
    while (true) {
        RSub next = w;
        for (int f : rel.classes[cls]) next = preimage_under_ideal(v, next, simples[f].ideal);
        if (next == w) return w;
        w = next;
    }
}

int BlockPartition::piece_dim_sum() const {
    int s = 0;
    for (const auto& [_, p] : pieces) s += p.dim();
    return s;
}

BlockPartition block_decompose(const Module& v, const Relation& rel,
                               const std::vector<MaxIdeal>& simples) {
    BlockPartition out;
    RSub sum(v.dim);
    for (int c = 0; c < rel.num_classes(); ++c) {
        RSub piece = block_space(v, c, rel, simples);
        if (piece.dim() == 0) continue;
        sum = subspace_sum(sum, piece);
        out.pieces.emplace(c, std::move(piece));
    }
    if (sum.dim() != out.piece_dim_sum())
        throw Error("block_decompose: block spaces are not independent (internal)");
    out.residual = complement_in(full_space<Rat>(v.dim), sum);
    return out;
}

std::set<int> support(const Module& v, const Relation& rel,
                      const std::vector<MaxIdeal>& simples) {
    std::set<int> s;
    for (int c = 0; c < rel.num_classes(); ++c)
        if (block_space(v, c, rel, simples).dim() > 0) s.insert(c);
    return s;
}

Vec piece_component(const BlockPartition& p, int cls, const Vec& vec) {
    int ambient = static_cast<int>(vec.size());
    if (p.residual.dim() != 0)
        throw Error("piece_component: partition has a nonzero residual");
    // Solve vec = sum over pieces; read off the cls coordinates.
    std::vector<const RSub*> order;
    std::vector<int> keys;
    for (const auto& [k, s] : p.pieces) {
        keys.push_back(k);
        order.push_back(&s);
    }
    int total = 0;
    for (const auto* s : order) total += s->dim();
    RMat sys(ambient, total);
    int col = 0;
    for (const auto* s : order)
        for (const auto& b : s->basis) {
            for (int i = 0; i < ambient; ++i) sys.at(i, col) = b[i];
            ++col;
        }
    auto sol = solve(sys, vec);
    if (!sol) throw Error("piece_component: vector outside the partition span");
    Vec out(ambient, Rat(0));
    col = 0;
    for (std::size_t t = 0; t < order.size(); ++t) {
        for (int j = 0; j < order[t]->dim(); ++j, ++col)
            if (keys[t] == cls && !((*sol)[col] == 0))
                for (int i = 0; i < ambient; ++i) out[i] += (*sol)[col] * order[t]->basis[j][i];
    }
    return out;
}

StrongReport is_strong(const Module& v, const Relation& rel,
                       const std::vector<MaxIdeal>& simples) {
    StrongReport rep;
    auto part = block_decompose(v, rel, simples);
    for (const auto& [cls, piece] : part.pieces) {
        Module pm = submodule(v, piece);
        std::vector<int> layers = composition_series(pm, simples);
        // Socle-first layers m_1..m_L kill the successive quotients, so the
        // product m_1 m_2 ... m_L annihilates on the left; the right-module
        // word is reversed.
        std::vector<int> factors = layers;
        if (v.side == Side::Right) std::reverse(factors.begin(), factors.end());
        // Greedy shortening.
        for (std::size_t i = 0; i < factors.size();) {
            std::vector<int> cand = factors;
            cand.erase(cand.begin() + static_cast<long>(i));
            if (word_image(v, piece, cand, simples).dim() == 0)
                factors = std::move(cand);
            else
                ++i;
        }
        for (int f : factors)
            if (rel.class_of[f] != cls)
                throw Error("is_strong: annihilating word left its block (internal)");
        if (word_image(v, piece, factors, simples).dim() != 0)
            throw Error("is_strong: word does not annihilate (internal)");
        rep.words.emplace(cls, make_word(v.alg, simples, rel, factors));
    }
    return rep;
}

FittingSplit fitting_split(const Module& v, int cls, const Relation& rel,
                           const std::vector<MaxIdeal>& simples) {
    auto part = block_decompose(v, rel, simples);
    if (part.residual.dim() != 0)
        throw Error("fitting_split: not a block module (nonzero residual)");
    FittingSplit out;
    out.vb = part.pieces.count(cls) ? part.pieces.at(cls) : RSub(v.dim);
    RSub rest(v.dim);
    for (const auto& [c, piece] : part.pieces)
        if (c != cls) rest = subspace_sum(rest, piece);
    out.rest = rest;
    auto strong = is_strong(v, rel, simples);
    if (out.vb.dim() > 0) {
        out.word = strong.words.at(cls);
        if (word_image(v, out.vb, out.word.factors, simples).dim() != 0)
            throw Error("fitting_split: annihilating word fails (internal)");
    } else {
        out.word = make_word(v.alg, simples, rel, {});
        out.word.block = cls;
    }
    // m V' = V' for every m in the block.
    for (int f : rel.classes[cls]) {
        RSub img = word_image(v, rest, {f}, simples);
        if (!(img == rest))
            throw Error("fitting_split: ideal does not act surjectively on the complement");
    }
    return out;
}

}  // namespace hcb
