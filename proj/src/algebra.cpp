#include "hcb/algebra.hpp"

#include <algorithm>
#include <map>

#include "hcb/limits.hpp"

namespace hcb {

SVec to_sparse(const Vec& v) {
    SVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!(v[i] == 0)) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SVec& v, int dim) {
    Vec d(dim, Rat(0));
    for (const auto& [i, c] : v) d[i] = c;
    return d;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    Vec out(dim, Rat(0));
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j) {
            if (y[j] == 0) continue;
            Rat f = x[i] * y[j];
            for (const auto& [k, c] : mult[i][j]) out[k] += f * c;
        }
    }
    return out;
}

RMat Algebra::left_mult(const Vec& x) const {
    RMat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : mult[i][j]) m.at(k, j) += x[i] * c;
    }
    return m;
}

RMat Algebra::right_mult(const Vec& x) const {
    RMat m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (x[j] == 0) continue;
        for (int i = 0; i < dim; ++i)
            for (const auto& [k, c] : mult[i][j]) m.at(k, i) += x[j] * c;
    }
    return m;
}

static SVec sparse_mul_sv(const Algebra& a, const SVec& x, int j) {
    std::map<int, Rat> acc;
    for (const auto& [i, ci] : x)
        for (const auto& [k, ck] : a.mult[i][j]) acc[k] += ci * ck;
    SVec out;
    for (auto& [k, c] : acc)
        if (!(c == 0)) out.emplace_back(k, c);
    return out;
}

static SVec sparse_mul_vs(const Algebra& a, int i, const SVec& y) {
    std::map<int, Rat> acc;
    for (const auto& [j, cj] : y)
        for (const auto& [k, ck] : a.mult[i][j]) acc[k] += cj * ck;
    SVec out;
    for (auto& [k, c] : acc)
        if (!(c == 0)) out.emplace_back(k, c);
    return out;
}

AlgebraPtr make_algebra(std::vector<std::string> names, Vec unit,
                        std::vector<std::vector<SVec>> mult) {
    auto a = std::make_shared<Algebra>();
    a->dim = static_cast<int>(names.size());
    if (a->dim < 1) throw Error("algebra: dim >= 1 with unit required");
    guard_dim(a->dim, "algebra");
    if (static_cast<int>(unit.size()) != a->dim ||
        static_cast<int>(mult.size()) != a->dim)
        throw Error("algebra: dimension mismatch");
    for (const auto& row : mult)
        if (static_cast<int>(row.size()) != a->dim)
            throw Error("algebra: dimension mismatch in multiplication table");
    a->basis_names = std::move(names);
    a->unit = std::move(unit);
    a->mult = std::move(mult);

    // Associativity on all basis triples.
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) {
            const SVec& ij = a->mult[i][j];
            for (int k = 0; k < a->dim; ++k) {
                SVec lhs = sparse_mul_sv(*a, ij, k);
                SVec rhs = sparse_mul_vs(*a, i, a->mult[j][k]);
                if (lhs != rhs)
                    throw Error("algebra: associativity fails at triple (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
            }
        }
    // Unit laws.
    SVec u = to_sparse(a->unit);
    for (int i = 0; i < a->dim; ++i) {
        SVec ei{{i, Rat(1)}};
        if (sparse_mul_sv(*a, u, i) != ei || sparse_mul_vs(*a, i, u) != ei)
            throw Error("algebra: unit law fails at basis element " +
                        a->basis_names[i]);
    }
    return a;
}

RMat Module::act_of(const Vec& x) const {
    RMat m(dim, dim);
    for (int i = 0; i < alg->dim; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t t = 0; t < m.a.size(); ++t) m.a[t] += x[i] * act[i].a[t];
    }
    return m;
}

void Module::validate() const {
    if (static_cast<int>(act.size()) != alg->dim) throw Error("module: action table size");
    for (const auto& m : act)
        if (m.rows != dim || m.cols != dim) throw Error("module: action shape");
    if (!(act_of(alg->unit) == RMat::identity(dim)))
        throw Error("module: unit does not act as identity");
    for (int i = 0; i < alg->dim; ++i)
        for (int j = 0; j < alg->dim; ++j) {
            const SVec& prod = side == Side::Left ? alg->mult[i][j] : alg->mult[j][i];
            RMat expect(dim, dim);
            for (const auto& [k, c] : prod)
                for (std::size_t t = 0; t < expect.a.size(); ++t)
                    expect.a[t] += c * act[k].a[t];
            if (!(mat_mul(act[i], act[j]) == expect))
                throw Error("module: representation law fails at pair (" +
                            std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

void Bimodule::validate() const {
    left_module().validate();
    right_module().validate();
    for (int i = 0; i < left_alg->dim; ++i)
        for (int j = 0; j < right_alg->dim; ++j)
            if (!(mat_mul(left_act[i], right_act[j]) == mat_mul(right_act[j], left_act[i])))
                throw Error("bimodule: actions do not commute at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
}

// --- ideals ------------------------------------------------------------------

bool is_ideal(const Ideal& i) {
    const auto& a = *i.alg;
    for (const auto& v : i.space.basis)
        for (int g = 0; g < a.dim; ++g) {
            Vec eg(a.dim, Rat(0));
            eg[g] = 1;
            if (!contains(i.space, a.mul(eg, v))) return false;
            if (!contains(i.space, a.mul(v, eg))) return false;
        }
    return true;
}

Ideal unit_ideal(const AlgebraPtr& a) { return Ideal{a, full_space<Rat>(a->dim)}; }
Ideal zero_ideal(const AlgebraPtr& a) { return Ideal{a, RSub(a->dim)}; }

Ideal ideal_closure(const AlgebraPtr& a, const std::vector<Vec>& gens) {
    RSub s = span_of(a->dim, gens);
    // Iterate left/right multiplication by basis elements to a fixpoint.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> next = s.basis;
        for (const auto& v : s.basis)
            for (int g = 0; g < a->dim; ++g) {
                Vec eg(a->dim, Rat(0));
                eg[g] = 1;
                Vec l = a->mul(eg, v), r = a->mul(v, eg);
                if (!contains(s, l)) next.push_back(l);
                if (!contains(s, r)) next.push_back(r);
            }
        if (next.size() != s.basis.size()) {
            RSub bigger = span_of(a->dim, next);
            if (bigger.dim() > s.dim()) {
                s = bigger;
                grew = true;
            }
        }
    }
    return Ideal{a, s};
}

static void check_same_algebra(const Ideal& i, const Ideal& j) {
    if (i.alg != j.alg) throw Error("ideal operation: algebra mismatch");
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
    check_same_algebra(i, j);
    // Pairwise products of basis vectors span the product two-sided ideal.
    std::vector<Vec> prods;
    for (const auto& x : i.space.basis)
        for (const auto& y : j.space.basis) prods.push_back(i.alg->mul(x, y));
    return Ideal{i.alg, span_of(i.alg->dim, prods)};
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
    check_same_algebra(i, j);
    return Ideal{i.alg, subspace_sum(i.space, j.space)};
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
    check_same_algebra(i, j);
    return Ideal{i.alg, subspace_intersect(i.space, j.space)};
}

Ideal ideal_power(const Ideal& i, int n) {
    if (n < 0) throw Error("ideal_power: negative power");
    Ideal acc = unit_ideal(i.alg);
    for (int k = 0; k < n; ++k) acc = ideal_product(acc, i);
    return acc;
}

// --- linear helpers ----------------------------------------------------------

Vec reduce_mod(const RSub& s, const Vec& v) {
    Vec w = v;
    for (const auto& row : s.basis) {
        int lead = 0;
        while (lead < s.ambient && row[lead] == 0) ++lead;
        if (lead >= s.ambient || w[lead] == 0) continue;
        Rat f = w[lead];
        for (int j = 0; j < s.ambient; ++j) w[j] -= f * row[j];
    }
    return w;
}

Vec coords_in(const RSub& s, const Vec& v) {
    // Echelon basis: the coordinate at row r is v[pivot_r] after clearing
    // earlier rows; with a reduced basis it is just v[pivot_r].
    Vec c(s.basis.size(), Rat(0));
    for (std::size_t r = 0; r < s.basis.size(); ++r) {
        int lead = 0;
        while (lead < s.ambient && s.basis[r][lead] == 0) ++lead;
        c[r] = v[lead];
    }
    // Containment check.
    Vec rec(s.ambient, Rat(0));
    for (std::size_t r = 0; r < s.basis.size(); ++r)
        for (int j = 0; j < s.ambient; ++j) rec[j] += c[r] * s.basis[r][j];
    if (!(rec == v)) throw Error("coords_in: vector not in subspace");
    return c;
}

RSub constrained_kernel(int nvars, const std::vector<RMat>& constraints) {
    std::vector<Vec> basis;
    for (int i = 0; i < nvars; ++i) {
        Vec v(nvars, Rat(0));
        v[i] = 1;
        basis.push_back(std::move(v));
    }
    for (const auto& c : constraints) {
        if (basis.empty()) break;
        RMat img(c.rows, static_cast<int>(basis.size()));
        for (int j = 0; j < img.cols; ++j) {
            Vec w = mat_apply(c, basis[j]);
            for (int i = 0; i < c.rows; ++i) img.at(i, j) = w[i];
        }
        std::vector<Vec> next;
        for (const auto& x : kernel(img)) {
            Vec v(nvars, Rat(0));
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (x[j] == 0) continue;
                for (int i = 0; i < nvars; ++i) v[i] += x[j] * basis[j][i];
            }
            next.push_back(std::move(v));
        }
        basis = std::move(next);
    }
    return span_of(nvars, basis);
}

UPoly min_poly(const RMat& m) {
    if (m.rows != m.cols) throw Error("min_poly: square matrix required");
    int n = m.rows;
    std::vector<Vec> powers;  // flattened m^k
    RMat p = RMat::identity(n);
    while (true) {
        Vec flat(p.a.begin(), p.a.end());
        // Try to express flat in terms of previous powers.
        RMat sys(n * n, static_cast<int>(powers.size()));
        for (int j = 0; j < sys.cols; ++j)
            for (int i = 0; i < n * n; ++i) sys.at(i, j) = powers[j][i];
        if (!powers.empty()) {
            if (auto sol = solve(sys, flat)) {
                UPoly mp(powers.size() + 1, Rat(0));
                for (std::size_t j = 0; j < powers.size(); ++j) mp[j] = -(*sol)[j];
                mp.back() = 1;
                return mp;
            }
        }
        powers.push_back(flat);
        p = mat_mul(p, m);
        if (static_cast<int>(powers.size()) > n * n + 1)
            throw Error("min_poly: no dependence found");  // unreachable
    }
}

// --- radical -----------------------------------------------------------------

Ideal radical(const AlgebraPtr& a) {
    // x in Rad(A) iff trace(L_{x e_j}) = 0 for all j (char 0).
    Vec tr(a->dim, Rat(0));
    for (int k = 0; k < a->dim; ++k) {
        Rat t(0);
        for (int j = 0; j < a->dim; ++j)
            for (const auto& [idx, c] : a->mult[k][j])
                if (idx == j) t += c;
        tr[k] = t;
    }
    RMat gram(a->dim, a->dim);  // gram[j][i] = trace(L_{e_i e_j})
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) {
            Rat g(0);
            for (const auto& [k, c] : a->mult[i][j]) g += c * tr[k];
            gram.at(j, i) = g;
        }
    std::vector<Vec> ker = kernel(gram);
    Ideal r{a, span_of(a->dim, ker)};
    return r;
}

// --- quotients ---------------------------------------------------------------

AlgebraQuotient quotient_algebra(const AlgebraPtr& a, const Ideal& i) {
    if (i.alg != a) throw Error("quotient_algebra: algebra mismatch");
    RSub full = full_space<Rat>(a->dim);
    std::vector<Vec> reps = quotient_basis(full, i.space);
    int q = static_cast<int>(reps.size());
    if (q == 0) throw Error("quotient_algebra: quotient by the unit ideal is the zero algebra");

    // Projection: reduce mod the ideal, then express in the rep basis.
    // Representatives reduced mod the ideal form an echelon set.
    std::vector<Vec> red;
    for (const auto& r : reps) red.push_back(reduce_mod(i.space, r));
    RMat sys(a->dim, q);
    for (int j = 0; j < q; ++j)
        for (int k = 0; k < a->dim; ++k) sys.at(k, j) = red[j][k];
    RMat proj(q, a->dim);
    for (int k = 0; k < a->dim; ++k) {
        Vec e(a->dim, Rat(0));
        e[k] = 1;
        auto sol = solve(sys, reduce_mod(i.space, e));
        if (!sol) throw Error("quotient_algebra: projection failed");
        for (int j = 0; j < q; ++j) proj.at(j, k) = (*sol)[j];
    }

    std::vector<std::string> names;
    for (int j = 0; j < q; ++j) names.push_back("q" + std::to_string(j));
    Vec unit = mat_apply(proj, a->unit);
    std::vector<std::vector<SVec>> mult(q, std::vector<SVec>(q));
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            mult[x][y] = to_sparse(mat_apply(proj, a->mul(reps[x], reps[y])));
    AlgebraQuotient out;
    out.alg = make_algebra(std::move(names), std::move(unit), std::move(mult));
    out.lift = reps;
    out.proj = std::move(proj);
    return out;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
    std::vector<std::vector<SVec>> mult(a->dim, std::vector<SVec>(a->dim));
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < a->dim; ++j) mult[i][j] = a->mult[j][i];
    return make_algebra(a->basis_names, a->unit, std::move(mult));
}

Module op_view(const Module& right_mod, const AlgebraPtr& op) {
    if (right_mod.side != Side::Right) throw Error("op_view: right module expected");
    return Module{op, Side::Left, right_mod.dim, right_mod.act};
}

// --- module plumbing -----------------------------------------------------------

Module regular_module(const AlgebraPtr& a, Side side) {
    Module m{a, side, a->dim, {}};
    for (int i = 0; i < a->dim; ++i) {
        Vec e(a->dim, Rat(0));
        e[i] = 1;
        m.act.push_back(side == Side::Left ? a->left_mult(e) : a->right_mult(e));
    }
    return m;
}

RSub spin(const Module& m, const std::vector<Vec>& seeds) {
    RSub s = span_of(m.dim, seeds);
    std::vector<Vec> queue = s.basis;
    while (!queue.empty()) {
        std::vector<Vec> next;
        for (const auto& v : queue)
            for (int i = 0; i < m.alg->dim; ++i) {
                Vec w = mat_apply(m.act[i], v);
                if (!contains(s, w)) {
                    std::vector<Vec> vecs = s.basis;
                    vecs.push_back(w);
                    s = span_of(m.dim, vecs);
                    next.push_back(std::move(w));
                }
            }
        queue = std::move(next);
    }
    return s;
}

RSub ann_kernel(const Module& m, const std::vector<Vec>& xs) {
    std::vector<RMat> cons;
    for (const auto& x : xs) cons.push_back(m.act_of(x));
    return constrained_kernel(m.dim, cons);
}

Module submodule(const Module& m, const RSub& u) {
    Module s{m.alg, m.side, u.dim(), {}};
    for (int i = 0; i < m.alg->dim; ++i) {
        RMat a(u.dim(), u.dim());
        for (int j = 0; j < u.dim(); ++j) {
            Vec img = mat_apply(m.act[i], u.basis[j]);
            Vec c = coords_in(u, img);  // throws if u is not invariant
            for (int r = 0; r < u.dim(); ++r) a.at(r, j) = c[r];
        }
        s.act.push_back(std::move(a));
    }
    return s;
}

Vec ModuleQuotient::coords(const Vec& v) const {
    Vec w = reduce_mod(sub, v);
    RMat sys(static_cast<int>(w.size()), static_cast<int>(lift.size()));
    for (int j = 0; j < sys.cols; ++j) {
        Vec r = reduce_mod(sub, lift[j]);
        for (int i = 0; i < sys.rows; ++i) sys.at(i, j) = r[i];
    }
    auto sol = solve(sys, w);
    if (!sol) throw Error("quotient coords: vector not reachable");
    return *sol;
}

ModuleQuotient quotient_module(const Module& m, const RSub& u) {
    ModuleQuotient out;
    out.sub = u;
    RSub full = full_space<Rat>(m.dim);
    out.lift = quotient_basis(full, u);
    int q = static_cast<int>(out.lift.size());
    out.mod = Module{m.alg, m.side, q, {}};
    for (int i = 0; i < m.alg->dim; ++i) {
        RMat a(q, q);
        for (int j = 0; j < q; ++j) {
            Vec img = mat_apply(m.act[i], out.lift[j]);
            Vec c = out.coords(img);
            for (int r = 0; r < q; ++r) a.at(r, j) = c[r];
        }
        out.mod.act.push_back(std::move(a));
    }
    return out;
}

// --- cfs ---------------------------------------------------------------------

static const char* kNonSplit = "non-split simple; supply splitting data";

// Minimal S-submodule of `cand`; S-split blocks terminate with End = k.
static Module minimal_submodule(const Module& cand0) {
    Module cand = cand0;
    while (true) {
        auto end = hom_space(cand, cand);
        if (end.size() <= 1) return cand;
        // Find a singular nonzero endomorphism and descend to its image.
        std::vector<RMat> tries;
        for (const auto& e : end) tries.push_back(e);
        for (std::size_t i = 0; i < end.size(); ++i)
            for (std::size_t j = i + 1; j < end.size(); ++j) {
                tries.push_back(mat_add(end[i], end[j]));
                tries.push_back(mat_add(end[i], mat_scale(end[j], Rat(-1))));
                tries.push_back(mat_mul(end[i], end[j]));
            }
        bool descended = false;
        for (const auto& phi : tries) {
            UPoly mp = min_poly(phi);
            auto fr = up_factor_squarefree(up_squarefree_part(mp), 8);
            if (fr.unresolved) continue;
            const UPoly* g = nullptr;
            if (fr.irreducible.size() >= 2) g = &fr.irreducible.front();
            else if (deg(mp) > deg(fr.irreducible.front())) g = &fr.irreducible.front();
            if (!g) continue;  // irreducible minimal polynomial: invertible
            // psi = g(phi) is singular; a nonzero image is a proper submodule.
            RMat psi(cand.dim, cand.dim);
            RMat pw = RMat::identity(cand.dim);
            for (std::size_t k = 0; k < g->size(); ++k) {
                psi = mat_add(psi, mat_scale(pw, (*g)[k]));
                pw = mat_mul(pw, phi);
            }
            std::vector<Vec> cols;
            for (int c = 0; c < cand.dim; ++c) {
                Vec col(cand.dim);
                for (int r = 0; r < cand.dim; ++r) col[r] = psi.at(r, c);
                cols.push_back(std::move(col));
            }
            RSub img = span_of(cand.dim, cols);
            if (img.dim() == 0 || img.dim() == cand.dim) continue;
            cand = submodule(cand, img);
            descended = true;
            break;
        }
        if (!descended) throw Error(kNonSplit);
    }
}

std::vector<MaxIdeal> cfs(const AlgebraPtr& a, int degree_cap) {
    Ideal rad = radical(a);
    AlgebraQuotient qa = quotient_algebra(a, rad);
    const AlgebraPtr& s = qa.alg;
    int ds = s->dim;

    // Center of the semisimple quotient.
    std::vector<RMat> cons;
    for (int i = 0; i < ds; ++i) {
        Vec e(ds, Rat(0));
        e[i] = 1;
        cons.push_back(mat_add(s->left_mult(e), mat_scale(s->right_mult(e), Rat(-1))));
    }
    RSub center = constrained_kernel(ds, cons);

    // Split the center into primitive components by factoring minimal
    // polynomials of multiplication operators.
    std::vector<RSub> comps{center};
    auto split_by = [&](const Vec& z) {
        std::vector<RSub> next;
        for (const auto& comp : comps) {
            int k = comp.dim();
            RMat mz(k, k);
            for (int j = 0; j < k; ++j) {
                Vec img = s->mul(z, comp.basis[j]);
                Vec c = coords_in(comp, img);
                for (int r = 0; r < k; ++r) mz.at(r, j) = c[r];
            }
            UPoly mp = min_poly(mz);
            auto fr = up_factor_squarefree(mp, degree_cap);
            if (fr.unresolved) throw Error(kNonSplit);
            if (fr.irreducible.size() <= 1) {
                next.push_back(comp);
                continue;
            }
            for (const auto& g : fr.irreducible) {
                RMat gz(k, k);
                RMat pw = RMat::identity(k);
                for (std::size_t t = 0; t < g.size(); ++t) {
                    gz = mat_add(gz, mat_scale(pw, g[t]));
                    pw = mat_mul(pw, mz);
                }
                std::vector<Vec> vecs;
                for (const auto& x : kernel(gz)) {
                    Vec v(ds, Rat(0));
                    for (int j = 0; j < k; ++j)
                        if (!(x[j] == 0))
                            for (int i = 0; i < ds; ++i) v[i] += x[j] * comp.basis[j][i];
                    vecs.push_back(std::move(v));
                }
                next.push_back(span_of(ds, vecs));
            }
        }
        comps = std::move(next);
    };
    for (const auto& z : center.basis) split_by(z);
    // Products of center basis vectors separate components that a basis
    // pass can miss; harmless when already primitive.
    for (std::size_t i = 0; i < center.basis.size(); ++i)
        for (std::size_t j = i; j < center.basis.size(); ++j)
            split_by(s->mul(center.basis[i], center.basis[j]));

    // Unit of each component, then the Wedderburn block e S.
    Module sreg = regular_module(s, Side::Left);
    std::vector<MaxIdeal> out;
    for (const auto& comp : comps) {
        int k = comp.dim();
        // Component unit: solve sum_i x_i (c_i c_j) = c_j for all j.
        RMat big(k * k, k);
        Vec rhs(k * k, Rat(0));
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < k; ++i) {
                Vec prod = s->mul(comp.basis[i], comp.basis[j]);
                Vec c = coords_in(comp, prod);
                for (int r = 0; r < k; ++r) big.at(j * k + r, i) = c[r];
            }
            Vec cj = coords_in(comp, comp.basis[j]);
            for (int r = 0; r < k; ++r) rhs[j * k + r] = cj[r];
        }
        auto esol = solve(big, rhs);
        if (!esol) throw Error("cfs: component has no unit (internal)");
        Vec e(ds, Rat(0));
        for (int i = 0; i < k; ++i)
            if (!((*esol)[i] == 0))
                for (int t = 0; t < ds; ++t) e[t] += (*esol)[i] * comp.basis[i][t];

        // Block subspace e S of the semisimple quotient.
        std::vector<Vec> block_vecs;
        RMat le = s->left_mult(e);
        for (int i = 0; i < ds; ++i) {
            Vec ei(ds, Rat(0));
            ei[i] = 1;
            block_vecs.push_back(mat_apply(le, ei));
        }
        RSub block = span_of(ds, block_vecs);

        // Simple module: minimal submodule of the block inside the regular
        // module of s, starting from the smallest basis-vector spin.
        RSub best;
        for (const auto& v : block.basis) {
            RSub l = spin(sreg, {v});
            if (best.dim() == 0 || (l.dim() > 0 && l.dim() < best.dim())) best = l;
        }
        Module simple_s = minimal_submodule(submodule(sreg, best));

        // Pull the action back to the original algebra.
        Module simple{a, Side::Left, simple_s.dim, {}};
        for (int i = 0; i < a->dim; ++i) {
            Vec e_i(a->dim, Rat(0));
            e_i[i] = 1;
            simple.act.push_back(simple_s.act_of(qa.coords(e_i)));
        }

        // Maximal ideal: preimage of (1 - e) S plus the radical; central
        // idempotents are orthogonal so (1 - e) S is the complement block sum.
        std::vector<Vec> ideal_vecs = rad.space.basis;
        Vec one_minus_e = s->unit;
        for (int t = 0; t < ds; ++t) one_minus_e[t] -= e[t];
        RMat lme = s->left_mult(one_minus_e);
        for (int i = 0; i < ds; ++i) {
            Vec ei(ds, Rat(0));
            ei[i] = 1;
            Vec w = mat_apply(lme, ei);
            // lift to the original algebra
            Vec lifted(a->dim, Rat(0));
            for (int j = 0; j < ds; ++j)
                if (!(w[j] == 0))
                    for (int t = 0; t < a->dim; ++t) lifted[t] += w[j] * qa.lift[j][t];
            ideal_vecs.push_back(std::move(lifted));
        }
        MaxIdeal mi;
        mi.ideal = Ideal{a, span_of(a->dim, ideal_vecs)};
        mi.simple = std::move(simple);
        mi.codim = block.dim();
        out.push_back(std::move(mi));
    }

    std::sort(out.begin(), out.end(), [](const MaxIdeal& x, const MaxIdeal& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        return x.ideal.space < y.ideal.space;
    });
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i].label.empty()) out[i].label = "m" + std::to_string(i);

    // Certify: each simple is annihilated by exactly its ideal.
    for (const auto& mi : out) {
        std::vector<RMat> acons;
        RMat flat(mi.simple.dim * mi.simple.dim, a->dim);
        for (int i = 0; i < a->dim; ++i)
            for (int r = 0; r < mi.simple.dim; ++r)
                for (int c = 0; c < mi.simple.dim; ++c)
                    flat.at(r * mi.simple.dim + c, i) = mi.simple.act[i].at(r, c);
        RSub ann = span_of(a->dim, kernel(flat));
        if (!(ann == mi.ideal.space)) throw Error(kNonSplit);
    }
    return out;
}

// --- composition factors -------------------------------------------------------

namespace {

// cfs list matched to the opposite algebra: two-sided ideals are the same
// subspaces, so simples pair up by ideal.
std::vector<MaxIdeal> op_simples(const AlgebraPtr& op, const std::vector<MaxIdeal>& simples) {
    auto raw = cfs(op);
    std::vector<MaxIdeal> out(simples.size());
    for (auto& mi : raw) {
        bool placed = false;
        for (std::size_t i = 0; i < simples.size(); ++i)
            if (simples[i].ideal.space == mi.ideal.space) {
                mi.label = simples[i].label;
                out[i] = std::move(mi);
                placed = true;
                break;
            }
        if (!placed) throw Error("composition_factors: opposite algebra simples mismatch");
    }
    return out;
}

}  // namespace

std::vector<int> composition_series(const Module& v, const std::vector<MaxIdeal>& simples,
                                    std::vector<RSub>* chain) {
    // Right modules are handled as left modules over the opposite algebra.
    if (v.side == Side::Right) {
        AlgebraPtr op = opposite_algebra(v.alg);
        Module lv = op_view(v, op);
        auto osimples = op_simples(op, simples);
        return composition_series(lv, osimples, chain);
    }
    std::vector<int> order;
    if (chain) chain->clear();
    Module cur = v;
    // Accumulated submodule of the original v corresponding to the part
    // already stripped (ambient coords of v).
    RSub acc(v.dim);
    std::vector<ModuleQuotient> quots;
    auto to_ambient = [&](Vec x) {
        for (auto it = quots.rbegin(); it != quots.rend(); ++it) {
            std::size_t up_dim = it->sub.ambient;
            Vec up(up_dim, Rat(0));
            for (std::size_t j = 0; j < x.size(); ++j)
                if (!(x[j] == 0))
                    for (std::size_t t = 0; t < up_dim; ++t) up[t] += x[j] * it->lift[j][t];
            x = std::move(up);
        }
        return x;
    };
    while (cur.dim > 0) {
        bool found = false;
        for (std::size_t mi = 0; mi < simples.size(); ++mi) {
            RSub w = ann_kernel(cur, simples[mi].ideal.space.basis);
            if (w.dim() == 0) continue;
            Module wmod = submodule(cur, w);
            auto homs = hom_space(simples[mi].simple, wmod);
            if (homs.empty())
                continue;  // annihilated part belongs to another simple with the same ideal? impossible
            // Image of the first intertwiner is one simple copy.
            std::vector<Vec> cols;
            for (int c = 0; c < homs[0].cols; ++c) {
                Vec col(homs[0].rows);
                for (int r = 0; r < homs[0].rows; ++r) col[r] = homs[0].at(r, c);
                cols.push_back(std::move(col));
            }
            RSub img_w = span_of(w.dim(), cols);
            // Map back from w-coords to cur-coords.
            std::vector<Vec> in_cur;
            for (const auto& x : img_w.basis) {
                Vec y(cur.dim, Rat(0));
                for (std::size_t j = 0; j < x.size(); ++j)
                    if (!(x[j] == 0))
                        for (int t = 0; t < cur.dim; ++t) y[t] += x[j] * w.basis[j][t];
                in_cur.push_back(std::move(y));
            }
            RSub copy = span_of(cur.dim, in_cur);
            order.push_back(static_cast<int>(mi));
            if (chain) {
                std::vector<Vec> vecs = acc.basis;
                for (const auto& x : copy.basis) vecs.push_back(to_ambient(x));
                acc = span_of(v.dim, vecs);
                chain->push_back(acc);
            }
            auto q = quotient_module(cur, copy);
            quots.push_back(q);
            cur = q.mod;
            found = true;
            break;
        }
        if (!found) throw Error("composition_series: no simple submodule found (invalid module?)");
    }
    return order;
}

std::vector<std::pair<int, int>> composition_factors(const Module& v,
                                                     const std::vector<MaxIdeal>& simples) {
    auto order = composition_series(v, simples);
    std::map<int, int> mult;
    for (int i : order) mult[i]++;
    return {mult.begin(), mult.end()};
}

std::vector<RMat> hom_space(const Module& u, const Module& v) {
    if (u.alg != v.alg || u.side != v.side) throw Error("hom_space: module mismatch");
    // Unknown f (v.dim x u.dim) with f act_u(e_i) = act_v(e_i) f.
    int n = u.dim * v.dim;
    std::vector<RMat> cons;
    for (int i = 0; i < u.alg->dim; ++i) {
        RMat c(n, n);
        // row index (r, s) for entry [r][s] of the residual matrix
        // f * act_u - act_v * f ; unknown index (p, q) for f[p][q].
        for (int r = 0; r < v.dim; ++r)
            for (int s = 0; s < u.dim; ++s) {
                int row = r * u.dim + s;
                for (int q = 0; q < u.dim; ++q) c.at(row, r * u.dim + q) += u.act[i].at(q, s);
                for (int p = 0; p < v.dim; ++p) c.at(row, p * u.dim + s) -= v.act[i].at(r, p);
            }
        cons.push_back(std::move(c));
    }
    RSub sols = constrained_kernel(n, cons);
    std::vector<RMat> out;
    for (const auto& x : sols.basis) {
        RMat f(v.dim, u.dim);
        for (int p = 0; p < v.dim; ++p)
            for (int q = 0; q < u.dim; ++q) f.at(p, q) = x[p * u.dim + q];
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace hcb
