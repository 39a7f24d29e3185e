#include "mtc/moves.hpp"

#include <stdexcept>

namespace mtc {

namespace {

void require_two_to_any(const HomMorphism& f, const char* who) {
    if (f.src.size() != 2)
        throw std::invalid_argument(std::string(who) +
                                    ": source must have exactly two legs");
}

void require_vertex_shape(const HomMorphism& f, const char* who) {
    require_two_to_any(f, who);
    if (f.tgt.size() != 1)
        throw std::invalid_argument(std::string(who) +
                                    ": target must have exactly one leg");
}

}  // namespace

HomMorphism omega0(const HomMorphism& f) {
    require_two_to_any(f, "omega0");
    const CategoryData& C = *f.cat;
    return compose(f, braid_pair(C, f.src[1], f.src[0], -1));
}

HomMorphism omega_minus1(const HomMorphism& f) {
    require_two_to_any(f, "omega_minus1");
    const CategoryData& C = *f.cat;
    return compose(f, braid_pair(C, f.src[1], f.src[0], +1));
}

namespace detail {

HomMorphism rotate_vertex(const HomMorphism& f, const RotationRecipe& rec) {
    require_vertex_shape(f, "rotate_vertex");
    const CategoryData& C = *f.cat;
    const int a1 = f.src[0], a2 = f.src[1], a3 = f.tgt[0];
    const int a2d = C.dual[a2], a3d = C.dual[a3];
    const int s = rec.braid_sign;

    // pair (a2, a2') for skeletons 0-2, pair (a2', a2) for skeleton 3
    HomMorphism fwd = rec.cup_kind == 0 ? cup(C, a2) : cup_left(C, a2d);
    HomMorphism rev = rec.cup_kind == 0 ? cup(C, a2d) : cup_left(C, a2);
    HomMorphism capm = rec.cap_kind == 0 ? cap_left(C, a3) : cap(C, a3d);
    HomMorphism h;
    switch (rec.skeleton) {
        case 0:
            // (a1,a3') -> (a1,a2,a2',a3') -> (a3,a2',a3') -> (a2',a3,a3') -> (a2')
            h = tensor_id_left({a1}, tensor_id_right(fwd, {a3d}));
            h = compose(tensor_id_right(f, {a2d, a3d}), h);
            h = compose(braid_at(C, {a3, a2d, a3d}, 0, s), h);
            h = compose(tensor_id_left({a2d}, capm), h);
            break;
        case 1:
            // (a1,a3') -> (a1,a2,a2',a3') -> (a3,a2',a3') -> (a3,a3',a2') -> (a2')
            h = tensor_id_left({a1}, tensor_id_right(fwd, {a3d}));
            h = compose(tensor_id_right(f, {a2d, a3d}), h);
            h = compose(braid_at(C, {a3, a2d, a3d}, 1, s), h);
            h = compose(tensor_id_right(capm, {a2d}), h);
            break;
        case 2:
            // (a1,a3') -> (a1,a3',a2,a2') -> (a1,a2,a3',a2') -> (a3,a3',a2') -> (a2')
            h = tensor_id_left({a1, a3d}, fwd);
            h = compose(braid_at(C, {a1, a3d, a2, a2d}, 1, s), h);
            h = compose(tensor_id_right(f, {a3d, a2d}), h);
            h = compose(tensor_id_right(capm, {a2d}), h);
            break;
        default:
            // (a1,a3') -> (a2',a2,a1,a3') -> (a2',a1,a2,a3') -> (a2',a3,a3') -> (a2')
            h = tensor_id_right(rev, {a1, a3d});
            h = compose(braid_at(C, {a2d, a2, a1, a3d}, 1, s), h);
            h = compose(tensor_id_left({a2d}, tensor_id_right(f, {a3d})), h);
            h = compose(tensor_id_left({a2d}, capm), h);
            break;
    }
    return h;
}

RotationRecipe tilde_recipe() { return RotationRecipe{3, +1, 0, 0}; }

}  // namespace detail

HomMorphism tildeA0(const HomMorphism& f) {
    return detail::rotate_vertex(f, detail::tilde_recipe());
}

HomMorphism hatA0(const HomMorphism& f) {
    // inverse of tildeA0 through the order-three cycle:
    // (omega0 . tildeA0)^3 = id, so tildeA0^-1 = omega0 . tildeA0 . omega0
    // . tildeA0 . omega0 composed right to left.
    HomMorphism g = omega0(f);
    g = tildeA0(g);
    g = omega0(g);
    g = tildeA0(g);
    return omega0(g);
}

HomMorphism sigma123(const HomMorphism& f) { return omega0(tildeA0(f)); }

HomMorphism sigma132(const HomMorphism& f) { return hatA0(omega_minus1(f)); }

Mat vertex_map_matrix(const CategoryData& cat, int x, int y, int z,
                      const std::function<HomMorphism(const HomMorphism&)>& op) {
    const int cols = cat.N(x, y, z);
    Mat out;
    for (int i = 0; i < cols; ++i) {
        HomMorphism img = op(vertex(cat, x, y, z, i));
        if (img.tgt.size() != 1)
            throw std::invalid_argument(
                "vertex_map_matrix: image is not a vertex space");
        const int zt = img.tgt[0];
        const int rows = cat.N(img.src[0], img.src[1], zt);
        if (i == 0) out = Mat::Zero(rows, cols);
        auto it = img.blocks.find(zt);
        if (it == img.blocks.end()) continue;
        for (int r = 0; r < rows; ++r) out(r, i) = it->second(0, r);
    }
    return out;
}

namespace detail {

HomMorphism linked_ring(const CategoryData& C, int a1, int a2, int a,
                        int s_outer, int s_inner) {
    const int a1d = C.dual[a1], a2d = C.dual[a2], ad = C.dual[a];
    // ∅ -> (a1, a1')
    HomMorphism h = cup(C, a1);
    // -> (a, a', a1, a1')
    h = compose(tensor_id_right(cup(C, a), {a1, a1d}), h);
    // -> (a2, a2', a, a', a1, a1')
    h = compose(tensor_id_right(cup(C, a2), {a, ad, a1, a1d}), h);
    // thread the a-strand through the a2-ring: over one edge, under the other
    h = compose(braid_at(C, {a2, a2d, a, ad, a1, a1d}, 1, s_inner), h);
    h = compose(braid_at(C, {a2, a, a2d, ad, a1, a1d}, 0, -s_inner), h);
    // close the a2-ring: -> (a, a', a1, a1')
    h = compose(tensor_id_left({a}, tensor_id_right(cap_left(C, a2),
                                                    {ad, a1, a1d})),
                h);
    // thread the a1-strand through the a-ring
    h = compose(braid_at(C, {a, ad, a1, a1d}, 1, s_outer), h);
    h = compose(braid_at(C, {a, a1, ad, a1d}, 0, -s_outer), h);
    // close the a-ring: -> (a1, a1')
    h = compose(tensor_id_left({a1}, tensor_id_right(cap_left(C, a), {a1d})),
                h);
    return h;
}

}  // namespace detail

CheckReport check_bk_lemma(const CategoryData& cat, int a1, int a2,
                           double tol) {
    if (a1 < 0 || a1 >= cat.n() || a2 < 0 || a2 >= cat.n())
        throw std::invalid_argument("check_bk_lemma: label out of range");
    Stopwatch sw;
    const cplx D = cat.Dscalar();
    HomMorphism acc = hom_zero(cat, {}, {a1, cat.dual[a1]});
    for (int a = 0; a < cat.n(); ++a) {
        HomMorphism term = detail::linked_ring(cat, a1, a2, a, +1, -1);
        term *= cat.dims[a2] * cat.dims[a] / (D * D);
        acc += term;
    }
    HomMorphism expect = cup(cat, a1);
    if (a1 != a2) expect *= 0.0;
    CheckReport rep;
    rep.add("linked-ring-reduction[" + cat.labels[a1] + "," + cat.labels[a2] +
                "]",
            hom_dist(acc, expect), tol, "", sw.elapsed_ms());
    return rep;
}

CheckReport check_dual_basis_lemma(const CategoryData& cat, int a3, int b,
                                   double tol) {
    if (a3 < 0 || a3 >= cat.n() || b < 0 || b >= cat.n())
        throw std::invalid_argument("check_dual_basis_lemma: label out of range");
    Stopwatch sw;
    const int a3d = cat.dual[a3];
    const Word sp{a3d, b};
    HomMorphism acc = hom_zero(cat, sp, sp);
    for (int a4 = 0; a4 < cat.n(); ++a4) {
        for (int k = 0; k < cat.N(a3, a4, b); ++k) {
            // (a3', b) -> (a4): bend a3 down on the left of a covertex
            HomMorphism down =
                compose(tensor_id_right(cap(cat, a3), {a4}),
                        tensor_id_left({a3d}, covertex(cat, a3, a4, b, k)));
            // (a4) -> (a3', b): bend a3 up on the left of a vertex
            HomMorphism up =
                compose(tensor_id_left({a3d}, vertex(cat, a3, a4, b, k)),
                        tensor_id_right(cup_left(cat, a3), {a4}));
            up *= cat.dims[a4] / cat.dims[b];
            acc += compose(up, down);
        }
    }
    CheckReport rep;
    rep.add("dual-vertex-reconstruction[" + cat.labels[a3] + "," +
                cat.labels[b] + "]",
            hom_dist(acc, hom_identity(cat, sp)), tol, "", sw.elapsed_ms());
    return rep;
}

CheckReport check_rotation_moves(const CategoryData& cat, double tol) {
    CheckReport rep;
    Stopwatch sw;

    // the vacuum-insertion vertex rotates to the vacuum insertion of the dual
    double worst_unit = 0.0;
    std::string wit_unit;
    for (int a = 0; a < cat.n(); ++a) {
        HomMorphism img = tildeA0(vertex(cat, cat.unit, a, a, 0));
        double d =
            hom_dist(img, vertex(cat, cat.unit, cat.dual[a], cat.dual[a], 0));
        if (d > worst_unit) {
            worst_unit = d;
            wit_unit = cat.labels[a];
        }
    }
    rep.add("rotation-fixes-unit-vertex", worst_unit, tol, wit_unit,
            sw.elapsed_ms());

    double worst_omega = 0.0, worst_leg = 0.0, worst_cycle = 0.0,
           worst_inv = 0.0;
    std::string wit_omega, wit_leg, wit_cycle, wit_inv;
    auto note = [&](double& worst, std::string& wit, double d, int a1, int a2,
                    int a3) {
        if (d > worst) {
            worst = d;
            wit = cat.labels[a1] + "," + cat.labels[a2] + "->" +
                  cat.labels[a3];
        }
    };
    std::uint64_t seed = 11;
    for (int a1 = 0; a1 < cat.n(); ++a1)
        for (int a2 = 0; a2 < cat.n(); ++a2)
            for (int a3 = 0; a3 < cat.n(); ++a3) {
                if (cat.N(a1, a2, a3) == 0) continue;
                HomMorphism f = random_hom(cat, {a1, a2}, {a3}, ++seed);
                note(worst_omega, wit_omega,
                     hom_dist(omega0(omega_minus1(f)), f) +
                         hom_dist(omega_minus1(omega0(f)), f),
                     a1, a2, a3);
                note(worst_leg, wit_leg,
                     hom_dist(hatA0(tildeA0(f)), f) +
                         hom_dist(tildeA0(hatA0(f)), f),
                     a1, a2, a3);
                note(worst_cycle, wit_cycle,
                     hom_dist(sigma123(sigma123(sigma123(f))), f), a1, a2, a3);
                note(worst_inv, wit_inv, hom_dist(sigma132(sigma123(f)), f),
                     a1, a2, a3);
            }
    rep.add("braid-rotation-inverse", worst_omega, tol, wit_omega,
            sw.elapsed_ms());
    rep.add("leg-rotation-inverse", worst_leg, tol, wit_leg, sw.elapsed_ms());
    rep.add("cyclic-rotation-order-three", worst_cycle, tol, wit_cycle,
            sw.elapsed_ms());
    rep.add("cyclic-rotation-inverse", worst_inv, tol, wit_inv,
            sw.elapsed_ms());
    return rep;
}

CheckReport check_duality_identities(const CategoryData& cat, double tol) {
    CheckReport rep;
    Stopwatch sw;

    double worst_bi = 0.0;
    for (int a = 0; a < cat.n(); ++a)
        for (int b = 0; b < cat.n(); ++b)
            for (int c = 0; c < cat.n(); ++c) {
                const int m = cat.N(a, b, c);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        HomMorphism p = compose(vertex(cat, a, b, c, i),
                                                covertex(cat, a, b, c, j));
                        HomMorphism expect = hom_identity(cat, {c});
                        if (i != j) expect *= 0.0;
                        worst_bi = std::max(worst_bi, hom_dist(p, expect));
                    }
            }
    rep.add("vertex-pairing-biorthogonal", worst_bi, tol, "",
            sw.elapsed_ms());

    double worst_res = 0.0;
    for (int a = 0; a < cat.n(); ++a)
        for (int b = 0; b < cat.n(); ++b) {
            const Word w{a, b};
            HomMorphism acc = hom_zero(cat, w, w);
            for (const auto& el : resolve_identity(cat, w))
                acc += compose(el.include, el.project);
            worst_res = std::max(worst_res,
                                 hom_dist(acc, hom_identity(cat, w)));
        }
    rep.add("identity-resolution", worst_res, tol, "", sw.elapsed_ms());

    double worst_tw = 0.0;
    std::string wit_tw;
    for (int a = 0; a < cat.n(); ++a) {
        const int ad = cat.dual[a];
        HomMorphism lhs = vertex(cat, ad, a, cat.unit, 0);
        HomMorphism mid =
            compose(vertex(cat, a, ad, cat.unit, 0), braid_pair(cat, ad, a, -1));
        mid *= 1.0 / cat.twists[a];
        HomMorphism rgt =
            compose(vertex(cat, a, ad, cat.unit, 0), braid_pair(cat, ad, a, +1));
        rgt *= cat.twists[a];
        double d = hom_dist(lhs, mid) + hom_dist(mid, rgt);
        if (d > worst_tw) {
            worst_tw = d;
            wit_tw = cat.labels[a];
        }
    }
    rep.add("bent-pairing-twist", worst_tw, tol, wit_tw, sw.elapsed_ms());

    double worst_db = 0.0;
    std::string wit_db;
    for (int a3 = 0; a3 < cat.n(); ++a3)
        for (int b = 0; b < cat.n(); ++b) {
            CheckReport one = check_dual_basis_lemma(cat, a3, b, tol);
            if (one.checks[0].residual > worst_db) {
                worst_db = one.checks[0].residual;
                wit_db = cat.labels[a3] + "," + cat.labels[b];
            }
        }
    rep.add("dual-vertex-reconstruction", worst_db, tol, wit_db,
            sw.elapsed_ms());

    double worst_bk = 0.0;
    std::string wit_bk;
    for (int a1 = 0; a1 < cat.n(); ++a1)
        for (int a2 = 0; a2 < cat.n(); ++a2) {
            CheckReport one = check_bk_lemma(cat, a1, a2, tol);
            if (one.checks[0].residual > worst_bk) {
                worst_bk = one.checks[0].residual;
                wit_bk = cat.labels[a1] + "," + cat.labels[a2];
            }
        }
    rep.add("linked-ring-reduction", worst_bk, tol, wit_bk, sw.elapsed_ms());

    return rep;
}

}  // namespace mtc
