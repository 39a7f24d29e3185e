#pragma once

#include <cstdint>
#include <vector>

#include "mtc/category.hpp"

namespace mtc {

// A tensor product of simple objects, as label indices. Empty = unit.
using Word = std::vector<int>;

// Left parenthesized fusion tree over a word: charges[k] is the channel
// after absorbing word[k] (so charges[0] = word[0] and charges.back() is the
// total charge), mults[k] < N(charges[k], word[k+1], charges[k+1]).
struct Tree {
    std::vector<int> charges;
    std::vector<int> mults;

    bool operator==(const Tree& o) const = default;
    // Lexicographic on (charges[1], mults[0], charges[2], mults[1], ...);
    // matches enumeration order.
    bool operator<(const Tree& o) const;
};

// All trees over w with the given total charge, in enumeration order. The
// empty word has exactly one tree, at the unit charge.
std::vector<Tree> enumerate_trees(const CategoryData& cat, const Word& w,
                                  int charge);
// Tree count by fusion-matrix product; used to size blocks without
// enumerating.
long tree_count(const CategoryData& cat, const Word& w, int charge);

// Morphism between word objects, one dense matrix per total charge:
// blocks[c](target tree, source tree). Absent blocks are zero. Morphisms are
// linear combinations sum blocks[c][T2,T1] F_{T2} E_{T1} of tree/cotree
// pairs, where E_T is the composite of vertices reading the tree and F_T the
// matching cotree, normalized so that E_T F_{T'} = delta.
struct HomMorphism {
    const CategoryData* cat = nullptr;
    Word src, tgt;
    std::map<int, Mat> blocks;

    // Zero-filled view; does not insert.
    Mat block_or_zero(int c) const;
    HomMorphism& operator*=(cplx s);
    HomMorphism& operator+=(const HomMorphism& o);
    bool matches(const HomMorphism& o) const {
        return src == o.src && tgt == o.tgt;
    }
};

HomMorphism hom_zero(const CategoryData& cat, Word src, Word tgt);
HomMorphism hom_identity(const CategoryData& cat, Word w);
// Largest |entry| of f - g; the words must agree.
double hom_dist(const HomMorphism& f, const HomMorphism& g);
double hom_norm(const HomMorphism& f);
// Deterministic dense morphism for property tests.
HomMorphism random_hom(const CategoryData& cat, Word src, Word tgt,
                       std::uint64_t seed);

// Single fusion vertex (a,b)->(c) with multiplicity index m, and the dual
// splitting vertex (c)->(a,b). E and F chains built from these satisfy
// E_T F_{T'} = delta by construction.
HomMorphism vertex(const CategoryData& cat, int a, int b, int c, int m);
HomMorphism covertex(const CategoryData& cat, int a, int b, int c, int m);

// f after g.
HomMorphism compose(const HomMorphism& f, const HomMorphism& g);
// f tensor id / id tensor g / general product (f tensor id) after
// (id tensor g).
HomMorphism tensor_id_right(const HomMorphism& f, const Word& u);
HomMorphism tensor_id_left(const Word& x, const HomMorphism& g);
HomMorphism tensor(const HomMorphism& f, const HomMorphism& g);

// Duality generators. cap(a): (a',a) -> unit with coefficient 1;
// cap_left(a): (a,a') -> unit; cup(a): unit -> (a,a');
// cup_left(a): unit -> (a',a). Normalized so that cap_left(a) after cup(a)
// and cap(a) after cup_left(a) are both dim(a), and so that the two closures
// of a vertex pairing differ by the twist relation between a vertex and its
// rotation.
HomMorphism cap(const CategoryData& cat, int a);
HomMorphism cap_left(const CategoryData& cat, int a);
HomMorphism cup(const CategoryData& cat, int a);
HomMorphism cup_left(const CategoryData& cat, int a);

// Elementary braid of two letters: (a,b) -> (b,a); sign +1 takes the stored
// braiding, -1 its inverse.
HomMorphism braid_pair(const CategoryData& cat, int a, int b, int sign);
// Adjacent braid at position pos of w (letters pos, pos+1).
HomMorphism braid_at(const CategoryData& cat, const Word& w, int pos,
                     int sign);

// Close the last letter of f: X.a -> Y.a to the right, giving X -> Y. The
// full quantum trace iterates this; for f: X -> X it equals
// sum_c dim_c trace(blocks[c]).
HomMorphism ptr_last(const HomMorphism& f);
cplx qtrace(const HomMorphism& f);

// Tree basis element as a pair of morphisms: project = E_T: w -> (charge),
// include = F_T: (charge) -> w. Summing include after project over all
// charges and trees gives the identity on w.
struct TreeBasisElement {
    int charge;
    Tree tree;
    HomMorphism project;
    HomMorphism include;
};
std::vector<TreeBasisElement> resolve_identity(const CategoryData& cat,
                                               const Word& w);

}  // namespace mtc
