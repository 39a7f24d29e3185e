#pragma once

#include <array>

#include "mtc/modular.hpp"

namespace mtc {

// Basis of the two-point space at external pair (a2, a3): left fusion
// trees over (a2, a3, a1) with total charge a1, i.e. quadruples
// (a1, a, j, i) with j < N(a2, a3, a) and i < N(a, a1, a1). Elements are
// grouped by the spectator a1, inner order (a, j, i).
struct TwoPointIndex {
    struct El {
        int spectator, charge, j, i;
    };
    std::vector<El> els;
    std::map<std::array<int, 4>, int> pos;

    int size() const { return int(els.size()); }
    // -1 when the quadruple is not admissible.
    int find(int spectator, int charge, int j, int i) const;
};
TwoPointIndex two_point_index(const CategoryData& cat, int a2, int a3);

// Automorphism induced by moving the second insertion one unit along the
// spatial cycle: regroup through the fusion blocks, scale by the twist of
// a3, insert the full positive monodromy on the (a3, spectator) vertex,
// and regroup back. Assembled from stored F blocks and vertex rotation
// matrices only.
Mat alpha_matrix(const CategoryData& cat, int a2, int a3);
// The same map evaluated through the diagram engine: each basis tree is
// composed with the double braiding of its a3 and spectator strands and
// scaled by the twist of a3.
Mat alpha_matrix_diagram(const CategoryData& cat, int a2, int a3);

// Automorphism induced by moving the second insertion along the temporal
// cycle: regroup through the fusion blocks, rotate both vertices with the
// tilde leg rotation, regroup, then apply the hat rotation on the new
// spectator vertex and the full negative monodromy on the external
// vertex. Assembled from stored F blocks and vertex rotation matrices.
Mat beta_matrix(const CategoryData& cat, int a2, int a3);
// The same composite evaluated through the diagram engine, expressing
// each regrouping by composing and re-expanding actual morphisms.
Mat beta_matrix_diagram(const CategoryData& cat, int a2, int a3);

// Block action of the modular map on the spectator factor: each inner
// charge block transforms by s_action of that charge, the external vertex
// index is untouched.
Mat s_two_point(const CategoryData& cat, int a2, int a3);

// Intertwining law S alpha = beta S on the two-point space, with the
// two-path agreement rows for alpha and beta, the unimodular spectrum of
// alpha, and the determinant modulus of beta.
CheckReport check_s_alpha_beta(const CategoryData& cat, int a2, int a3,
                               double tol = 1e-9);

}  // namespace mtc
