#pragma once

#include "hcb/ext.hpp"

namespace hcb {

// Opaque exact element of the big algebra A.  Concrete pairs use plain
// coordinate vectors; truncated presentations use graded polynomial data.
struct BigElemBase {
    virtual ~BigElemBase() = default;
};
using BigElem = std::shared_ptr<const BigElemBase>;

// Finite presentation of A/Aw (side Left) or A/wA (side Right) as a
// (Gamma, Gamma)-bimodule with the coset of 1 marked.  window_exact is
// false when the module is the in-window part of an infinite object; every
// claim then holds for the stored grading range only.
struct OracleModule {
    Side main_side = Side::Left;
    std::vector<int> factors;  // the ideal word, as cfs indices of gamma
    Bimodule bim;
    Vec unit_coset;
    bool window_exact = true;
    std::string note;

    Module main() const {
        return main_side == Side::Left ? bim.left_module() : bim.right_module();
    }
    Module other() const {
        return main_side == Side::Left ? bim.right_module() : bim.left_module();
    }
};

// Truncated presentation of the big algebra: quotient modules per ideal
// word plus exact arithmetic on lifted elements.
struct QuotientOracle {
    virtual ~QuotientOracle() = default;

    // Throws Error("oracle missing word ...") when the word is not covered.
    virtual OracleModule module(Side side, const std::vector<int>& factors) const = 0;

    // Canonical lift of a coset to an exact element of A.
    virtual BigElem lift(const OracleModule& m, const Vec& coords) const = 0;
    // Projection of an exact element onto the quotient; throws WindowError
    // when the element has content the window cannot certify.
    virtual Vec project(const OracleModule& m, const BigElem& x) const = 0;

    virtual BigElem mul(const BigElem& x, const BigElem& y) const = 0;
    virtual BigElem add(const BigElem& x, const BigElem& y) const = 0;
    virtual BigElem gamma_lift(const Vec& gamma_coords) const = 0;
    virtual BigElem unit_elem() const = 0;

    // A few exact elements of Aw (Left) or wA (Right), used to perturb
    // representatives in independence checks.
    virtual std::vector<BigElem> ideal_sample(Side side,
                                              const std::vector<int>& factors) const = 0;
};

struct PairPresentation {
    AlgebraPtr gamma;
    std::vector<MaxIdeal> simples;  // cfs(gamma), canonical order
    Relation rel;

    // Concrete mode: big is a finite-dimensional algebra with an embedding
    // of gamma (column i = image of gamma basis i).
    AlgebraPtr big;
    RMat embed;

    // Always set; concrete pairs get a wrapper oracle.
    std::shared_ptr<const QuotientOracle> oracle;

    bool concrete() const { return big != nullptr; }
    Vec embed_vec(const Vec& gamma_coords) const { return mat_apply(embed, gamma_coords); }
    IdealWord word(std::vector<int> factors) const {
        return make_word(gamma, simples, rel, std::move(factors));
    }
};

// Validates that embed is a unit-preserving injective algebra map.
PairPresentation make_concrete_pair(AlgebraPtr gamma, AlgebraPtr big, RMat embed,
                                    Relation rel, std::vector<MaxIdeal> simples = {});

// The big algebra restricted to a gamma-module along the embedding.
Module restrict_to_gamma(const PairPresentation& pp, const Module& big_mod);

struct QuotientSupport {
    OracleModule om;
    BlockPartition partition;
    std::set<int> supp;
};

QuotientSupport quotient_support(const PairPresentation& pp, const IdealWord& w, Side side);

struct WordReport {
    std::vector<int> factors;
    Side side = Side::Left;
    std::set<int> supp;
    int residual_dim = 0;
    bool strong = false;
    std::map<int, std::vector<int>> ann_words;  // class -> word factors
    bool window_exact = true;
};

struct HCReport {
    enum class Verdict { StrongHC, HC, Fail };
    std::vector<WordReport> words;
    Verdict verdict = Verdict::StrongHC;
    std::string witness;
};

// Left quotients decide hc; right quotients and annihilating words decide
// strong_hc.  Residual != 0 becomes a Fail verdict with the word recorded.
HCReport verify_hc_subalgebra(const PairPresentation& pp, const std::vector<IdealWord>& words);

struct BlockPreorder {
    int n = 0;                                           // number of classes
    std::set<std::pair<int, int>> edges;                 // stored generators
    std::map<std::pair<int, int>, std::vector<int>> provenance;  // edge -> word
};

BlockPreorder build_preorder(const PairPresentation& pp, const std::vector<int>& generators);
// b <= c in the preorder (c reachable from b; reflexive-transitive closure).
bool preorder_leq(const BlockPreorder& p, int b, int c);
std::vector<std::vector<int>> delta_components(const BlockPreorder& p);
std::vector<std::vector<int>> nabla_components(const BlockPreorder& p);

// --- concrete-big analysis ---------------------------------------------------

struct HCDecomposition {
    // one summand per delta-class with nonzero support
    std::vector<std::pair<std::vector<int>, RSub>> summands;
};

// Groups the block pieces of v (an A-module) by delta-class and verifies
// each group is A-invariant.
HCDecomposition decompose_hc_module(const PairPresentation& pp, const Module& v_big,
                                    const BlockPreorder& pre);

// Witness strings for failures of A.V(B) <= sum over C >= B of V(C); empty
// means the containment holds for every block and every basis element.
std::vector<std::string> relation_theorem_witnesses(const PairPresentation& pp,
                                                    const Module& v_big,
                                                    const BlockPreorder& pre);

struct BlockSpanVerdict {
    bool contained = false;
    std::set<int> generated_support;
    std::set<int> allowed;
};

// Prop. blockspan check: x killed by w, the A-submodule A.x has support
// inside the union of Supp(A/A m_i) over the factors of w.
BlockSpanVerdict verify_blockspan(const PairPresentation& pp, const Module& v_big,
                                  const Vec& x, const IdealWord& w);

// X(m): ideals of composition factors of Gamma a Gamma / Gamma a m over
// basis elements a of A.  A lower approximation (basis elements only).
std::set<int> x_set(const PairPresentation& pp, int m_index);

}  // namespace hcb
