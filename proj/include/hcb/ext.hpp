#pragma once

#include <map>
#include <set>

#include "hcb/algebra.hpp"

namespace hcb {

// dim Ext^1(S_s, S_t) with the first argument the quotient and the second
// the submodule of the extensions being classified (the sequence is
// 0 -> S_t -> V -> S_s -> 0).
int ext1_dim(const AlgebraPtr& a, const MaxIdeal& s, const MaxIdeal& t);

struct ExtQuiver {
    int n = 0;
    std::vector<std::vector<int>> edge_dims;  // [quotient][sub]
};

ExtQuiver ext_quiver(const AlgebraPtr& a, const std::vector<MaxIdeal>& simples);

struct Relation {
    enum class Kind { Equality, Ext, User };
    Kind kind = Kind::Equality;
    std::vector<std::vector<int>> classes;  // partition, each class sorted, classes by min
    std::vector<int> class_of;

    int size() const { return static_cast<int>(class_of.size()); }
    int num_classes() const { return static_cast<int>(classes.size()); }
};

Relation equality_relation(int n);
Relation user_relation(std::vector<std::vector<int>> classes, int n);
// Connected components of the undirected nonvanishing-Ext graph.
Relation ext_relation(const ExtQuiver& q);
// true when rel's classes are unions of fine's classes.
bool refines(const Relation& fine, const Relation& rel);

// Finite product of ideals from one block, with its subspace realization.
// An empty factor list is the whole algebra.
struct IdealWord {
    int block = -1;
    std::vector<int> factors;  // cfs indices, product taken left to right
    Ideal space;
};

IdealWord make_word(const AlgebraPtr& a, const std::vector<MaxIdeal>& simples,
                    const Relation& rel, std::vector<int> factors);

// w.V (left) or V.w (right) for the ideal word given by `factors`.
RSub word_image(const Module& v, const RSub& sub, const std::vector<int>& factors,
                const std::vector<MaxIdeal>& simples);

// V(B) = {v : some word from the class kills v}; stable kernel of the
// cyclic preimage chain.
RSub block_space(const Module& v, int cls, const Relation& rel,
                 const std::vector<MaxIdeal>& simples);

struct BlockPartition {
    std::map<int, RSub> pieces;  // class -> nonzero block space
    RSub residual;               // canonical complement of the direct sum
    int piece_dim_sum() const;
};

BlockPartition block_decompose(const Module& v, const Relation& rel,
                               const std::vector<MaxIdeal>& simples);

std::set<int> support(const Module& v, const Relation& rel,
                      const std::vector<MaxIdeal>& simples);

// Component of vec in the given piece along the rest of the partition
// (residual must be zero).
Vec piece_component(const BlockPartition& p, int cls, const Vec& vec);

struct StrongReport {
    bool strong = true;
    std::map<int, IdealWord> words;  // class -> annihilating word for the piece
};

// For finite-dimensional modules this always succeeds; the word comes from
// a composition series of the piece and is then greedily shortened.
StrongReport is_strong(const Module& v, const Relation& rel,
                       const std::vector<MaxIdeal>& simples);

struct FittingSplit {
    RSub vb;      // V(B)
    RSub rest;    // V' with m V' = V' for all m in the block
    IdealWord word;  // annihilates V(B)
};

// Requires v to be a block module (residual 0); verifies the Fitting
// properties and throws with a witness if they fail.
FittingSplit fitting_split(const Module& v, int cls, const Relation& rel,
                           const std::vector<MaxIdeal>& simples);

}  // namespace hcb
