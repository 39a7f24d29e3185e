#pragma once

#include "mtc/homspace.hpp"

namespace mtc {

// Same fusion and F data with the inverse braiding installed: the braid
// block of (a,b) in channel c becomes the inverse of the stored block of
// (b,a) in c, twists are inverted, and the mirror charge is negated. The
// result is again a valid category.
CategoryData reverse_category(const CategoryData& cat);

// Product of a category with its braid-reversed copy, on pair labels
// (a, abar) with index a * n + abar. Fusion and F data are entrywise
// products; the braid block of a pair is the Kronecker product of the
// stored block on the first factor and the reversed block on the second;
// twists are theta_a / theta_abar, so diagonal pairs are untwisted and the
// mirror charge is exactly zero. Composite multiplicity indices are always
// first-factor major.
struct DoubledCategory {
    CategoryData cat;   // the product category
    CategoryData base;  // the category it was built from

    int base_n() const { return base.n(); }
    int pair_index(int a, int abar) const { return a * base.n() + abar; }
    std::pair<int, int> unpair(int p) const {
        return {p / base.n(), p % base.n()};
    }
};

DoubledCategory build_double(const CategoryData& cat);

// Transport functor to the base category. A doubled word maps to the base
// word listing every first component in order, then every second component
// in order; pair (a, abar) maps to the two-letter word (a, abar).
Word transport_word(const DoubledCategory& dc, const Word& dword);

// Multiplicity of each base simple in the transported word, by fusion.
std::vector<long> transport_object(const DoubledCategory& dc,
                                   const Word& dword);

// Transport of a doubled morphism: each doubled fusion tree is a pair of
// base trees (charges split componentwise, multiplicities by first-major
// divmod), and a coordinate on such a pair becomes the base tree/cotree
// composite on the split words. Satisfies transport(f o g) =
// transport(f) o transport(g) exactly.
HomMorphism transport_morphism(const DoubledCategory& dc,
                               const HomMorphism& f);

// Sign of the crossing used when a second-component letter passes a
// first-component letter in the interleaver below. +1 takes the stored
// braiding of the base.
inline constexpr int kInterleaveSign = +1;

// Structure isomorphism transport(w1) (x) transport(w2) -> transport(w1.w2):
// the braid stack moving the second-component block of w1 right past the
// first-component block of w2, every crossing with the given sign. Makes
// the transport monoidal: transport(f (x) g) o interleaver =
// interleaver o (transport(f) (x) transport(g)).
HomMorphism transport_interleaver(const DoubledCategory& dc, const Word& w1,
                                  const Word& w2,
                                  int sign = kInterleaveSign);

// Invariant suite for the double of a category: the product category passes
// the axiom suite, its total dimension is |D|^2, diagonal pairs are
// untwisted, the unit tower of the modular transformation factorizes as the
// Kronecker product of the base tower with the reversed-base tower, and the
// transport is functorial and monoidal on seeded random morphisms.
CheckReport check_double(const CategoryData& base, double tol = 1e-9,
                         int threads = 1);

}  // namespace mtc
