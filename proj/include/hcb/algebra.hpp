#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hcb/subspace.hpp"
#include "hcb/upoly.hpp"

namespace hcb {

using Vec = std::vector<Rat>;
using RMat = Mat<Rat>;
using RSub = Subspace<Rat>;
// Sparse coordinate vector, sorted by index; structure-constant tables of
// the algebras in scope are very sparse and the associativity check relies
// on that.
using SVec = std::vector<std::pair<int, Rat>>;

SVec to_sparse(const Vec& v);
Vec to_dense(const SVec& v, int dim);

enum class Side { Left, Right };

// Finite-dimensional associative unital algebra over Rat, given by
// structure constants.  Construction validates the unit laws and
// associativity on all basis triples and throws with a witness on failure.
struct Algebra {
    int dim = 0;
    std::vector<std::string> basis_names;
    Vec unit;
    std::vector<std::vector<SVec>> mult;  // mult[i][j] = coords of e_i e_j

    SVec basis_product(int i, int j) const { return mult[i][j]; }
    Vec mul(const Vec& x, const Vec& y) const;
    RMat left_mult(const Vec& x) const;   // L_x : a -> x a
    RMat right_mult(const Vec& x) const;  // R_x : a -> a x
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validating constructor.
AlgebraPtr make_algebra(std::vector<std::string> names, Vec unit,
                        std::vector<std::vector<SVec>> mult);

// Finite-dimensional module given by one action matrix per algebra basis
// element (matrices act on column vectors for both sides; for a right
// module act(x) w is w.x, so act(i)act(j) = act(e_j e_i)).
struct Module {
    AlgebraPtr alg;
    Side side = Side::Left;
    int dim = 0;
    std::vector<RMat> act;

    RMat act_of(const Vec& x) const;
    void validate() const;  // representation law + unit; throws on failure
};

struct Bimodule {
    AlgebraPtr left_alg, right_alg;
    int dim = 0;
    std::vector<RMat> left_act, right_act;

    Module left_module() const { return Module{left_alg, Side::Left, dim, left_act}; }
    Module right_module() const { return Module{right_alg, Side::Right, dim, right_act}; }
    void validate() const;  // both laws and commuting actions
};

struct Ideal {
    AlgebraPtr alg;
    RSub space;

    int dim() const { return space.dim(); }
};

bool is_ideal(const Ideal& i);
Ideal unit_ideal(const AlgebraPtr& a);
Ideal zero_ideal(const AlgebraPtr& a);
// Smallest two-sided ideal containing gens.
Ideal ideal_closure(const AlgebraPtr& a, const std::vector<Vec>& gens);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
Ideal ideal_power(const Ideal& i, int n);

// Maximal two-sided ideal of finite codimension together with the unique
// simple module of the quotient.
struct MaxIdeal {
    Ideal ideal;
    Module simple;  // left module
    int codim = 0;
    std::string label;
};

// Jacobson radical via the characteristic-zero trace-form criterion.
Ideal radical(const AlgebraPtr& a);

// All cofinite maximal two-sided ideals with their simples, canonically
// sorted.  degree_cap bounds the factor search used for Wedderburn
// splitting; an undecidable split reports "non-split simple".
std::vector<MaxIdeal> cfs(const AlgebraPtr& a, int degree_cap = 8);

// Multiset of composition factors as (index into simples, multiplicity).
std::vector<std::pair<int, int>> composition_factors(const Module& v,
                                                     const std::vector<MaxIdeal>& simples);
// Socle-up composition series; returns one simples-index per layer and, if
// given, the intermediate submodule chain 0 = F_0 < F_1 < ... < F_L = V.
std::vector<int> composition_series(const Module& v, const std::vector<MaxIdeal>& simples,
                                    std::vector<RSub>* chain = nullptr);

// Basis of intertwiners u -> v (same algebra, same side).
std::vector<RMat> hom_space(const Module& u, const Module& v);

// --- module plumbing -------------------------------------------------------

Module regular_module(const AlgebraPtr& a, Side side);

// Submodule closure of the given seed vectors.
RSub spin(const Module& m, const std::vector<Vec>& seeds);

// {w : x w = 0 for all x in xs} (or w.x = 0 on the right).
RSub ann_kernel(const Module& m, const std::vector<Vec>& xs);

// Restriction of the action to an invariant subspace, in its basis coords.
Module submodule(const Module& m, const RSub& u);

struct ModuleQuotient {
    Module mod;
    std::vector<Vec> lift;  // coset representatives in the ambient coords
    Vec coords(const Vec& v) const;  // ambient vector -> quotient coords
    RSub sub;                        // what was quotiented out
};
ModuleQuotient quotient_module(const Module& m, const RSub& u);

struct AlgebraQuotient {
    AlgebraPtr alg;
    std::vector<Vec> lift;
    RMat proj;  // ambient coords -> quotient coords (linear projection)
    Vec coords(const Vec& v) const { return mat_apply(proj, v); }
};
AlgebraQuotient quotient_algebra(const AlgebraPtr& a, const Ideal& i);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);
// Right module as left module over the opposite algebra (same matrices).
Module op_view(const Module& right_mod, const AlgebraPtr& op);

// Coordinates of v in the reduced-echelon basis of s (v must lie in s).
Vec coords_in(const RSub& s, const Vec& v);
// v reduced modulo s (canonical coset representative).
Vec reduce_mod(const RSub& s, const Vec& v);

// Kernel of several linear constraints on F^nvars, computed by iterative
// restriction so early constraints shrink the search space.
RSub constrained_kernel(int nvars, const std::vector<RMat>& constraints);

// Minimal polynomial of a square matrix (monic).
UPoly min_poly(const RMat& m);

}  // namespace hcb
