#include "mtc/doubled.hpp"

#include <cmath>
#include <utility>

#include "mtc/modular.hpp"

namespace mtc {

namespace {

struct Worst {
    double residual = 0.0;
    std::string witness;
    void update(double r, const std::string& w) {
        if (r > residual) {
            residual = r;
            witness = w;
        }
    }
};

// Representative of c in (-4, 4] mod 8, resp. (-12, 12] mod 24.
double norm_mod(double c, double period) {
    double r = std::fmod(c, period);
    if (r <= -period / 2) r += period;
    if (r > period / 2) r -= period;
    return r;
}

// Worst row of an axiom report, as a single summarized result.
std::pair<double, std::string> worst_row(const CheckReport& rep) {
    double r = 0.0;
    std::string w;
    for (const auto& c : rep.checks)
        if (c.residual > r) {
            r = c.residual;
            w = c.name + (c.witness.empty() ? "" : " " + c.witness);
        }
    return {r, w};
}

}  // namespace

CategoryData reverse_category(const CategoryData& cat) {
    CategoryData rev = cat;
    rev.name = cat.name + "-rev";
    rev.R.clear();
    const int n = cat.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!cat.N(a, b, c)) continue;
                // Inverse of the stored block of (b,a): rows are vertices of
                // (b,a)->c, columns vertices of (a,b)->c, the shape of the
                // block of (a,b) in the reversed braiding.
                Mat m = cat.Rblock(b, a, c).inverse();
                for (int j = 0; j < m.rows(); ++j)
                    for (int i = 0; i < m.cols(); ++i)
                        if (m(j, i) != cplx(0.0)) rev.R[{a, b, c, i, j}] = m(j, i);
            }
    for (auto& t : rev.twists) t = 1.0 / t;
    rev.cmod8 = norm_mod(-cat.cmod8, 8.0);
    if (cat.cmod24) rev.cmod24 = norm_mod(-*cat.cmod24, 24.0);
    return rev;
}

DoubledCategory build_double(const CategoryData& cat) {
    const int n = cat.n();
    CategoryData rev = reverse_category(cat);

    DoubledCategory dc;
    dc.base = cat;
    CategoryData& d = dc.cat;
    d.name = cat.name + "-double";
    d.labels.reserve(size_t(n) * n);
    d.dual.reserve(size_t(n) * n);
    d.dims.reserve(size_t(n) * n);
    d.twists.reserve(size_t(n) * n);
    d.fs.reserve(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int ab = 0; ab < n; ++ab) {
            d.labels.push_back("(" + cat.label(a) + "," + cat.label(ab) + ")");
            d.dual.push_back(cat.dual[a] * n + cat.dual[ab]);
            d.dims.push_back(cat.dims[a] * cat.dims[ab]);
            d.twists.push_back(cat.twists[a] / cat.twists[ab]);
            d.fs.push_back(cat.fs[a] * cat.fs[ab]);
        }
    d.unit = cat.unit * n + cat.unit;
    d.cmod8 = 0.0;
    d.cmod24 = 0.0;

    d.fusion = FusionTable(n * n);
    for (int a = 0; a < n; ++a)
        for (int ab = 0; ab < n; ++ab)
            for (int b = 0; b < n; ++b)
                for (int bb = 0; bb < n; ++bb)
                    for (int c = 0; c < n; ++c)
                        for (int cb = 0; cb < n; ++cb)
                            d.fusion.at(a * n + ab, b * n + bb, c * n + cb) =
                                cat.N(a, b, c) * cat.N(ab, bb, cb);

    // F of a pair is the product of the factors' F entries; composite
    // multiplicity indices are first-factor major.
    for (const auto& [k1, v1] : cat.F)
        for (const auto& [k2, v2] : cat.F) {
            FKey k;
            for (int t = 0; t < 6; ++t) k[t] = k1[t] * n + k2[t];
            k[6] = k1[6] * cat.N(k2[0], k2[1], k2[4]) + k2[6];
            k[7] = k1[7] * cat.N(k2[4], k2[2], k2[3]) + k2[7];
            k[8] = k1[8] * cat.N(k2[1], k2[2], k2[5]) + k2[8];
            k[9] = k1[9] * cat.N(k2[0], k2[5], k2[3]) + k2[9];
            d.F[k] = v1 * v2;
        }

    // Braid block of a pair: stored block on the first factor, reversed
    // block on the second, Kronecker with first-factor-major indices.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (!cat.N(a, b, c)) continue;
                Mat r1 = cat.Rblock(a, b, c);
                for (int ab = 0; ab < n; ++ab)
                    for (int bb = 0; bb < n; ++bb)
                        for (int cb = 0; cb < n; ++cb) {
                            if (!cat.N(ab, bb, cb)) continue;
                            Mat r2 = rev.Rblock(ab, bb, cb);
                            for (int j1 = 0; j1 < r1.rows(); ++j1)
                                for (int j2 = 0; j2 < r2.rows(); ++j2)
                                    for (int i1 = 0; i1 < r1.cols(); ++i1)
                                        for (int i2 = 0; i2 < r2.cols(); ++i2) {
                                            cplx v = r1(j1, i1) * r2(j2, i2);
                                            if (v == cplx(0.0)) continue;
                                            d.R[{a * n + ab, b * n + bb,
                                                 c * n + cb,
                                                 int(i1 * r2.cols() + i2),
                                                 int(j1 * r2.rows() + j2)}] = v;
                                        }
                        }
            }
    return dc;
}

Word transport_word(const DoubledCategory& dc, const Word& dword) {
    Word w;
    w.reserve(2 * dword.size());
    for (int p : dword) w.push_back(dc.unpair(p).first);
    for (int p : dword) w.push_back(dc.unpair(p).second);
    return w;
}

std::vector<long> transport_object(const DoubledCategory& dc,
                                   const Word& dword) {
    Word w = transport_word(dc, dword);
    std::vector<long> mult(size_t(dc.base.n()), 0);
    for (int x = 0; x < dc.base.n(); ++x) mult[size_t(x)] = tree_count(dc.base, w, x);
    return mult;
}

namespace {

// Doubled tree over dword -> (tree on the first components, tree on the
// second components); multiplicities split by first-major divmod.
std::pair<Tree, Tree> split_tree(const DoubledCategory& dc, const Word& dword,
                                 const Tree& t) {
    const int k = int(dword.size());
    Tree u, v;
    u.charges.resize(size_t(k));
    v.charges.resize(size_t(k));
    for (int i = 0; i < k; ++i) {
        auto [c, cb] = dc.unpair(t.charges[size_t(i)]);
        u.charges[size_t(i)] = c;
        v.charges[size_t(i)] = cb;
    }
    if (k > 0) {
        u.mults.resize(size_t(k - 1));
        v.mults.resize(size_t(k - 1));
    }
    for (int i = 0; i + 1 < k; ++i) {
        int bb = dc.unpair(dword[size_t(i + 1)]).second;
        int n2 = dc.base.N(v.charges[size_t(i)], bb, v.charges[size_t(i + 1)]);
        u.mults[size_t(i)] = t.mults[size_t(i)] / n2;
        v.mults[size_t(i)] = t.mults[size_t(i)] % n2;
    }
    return {u, v};
}

struct BaseBasis {
    std::map<std::pair<int, Tree>, const TreeBasisElement*> by;
    std::vector<TreeBasisElement> els;

    explicit BaseBasis(const CategoryData& cat, const Word& w)
        : els(resolve_identity(cat, w)) {
        for (const auto& el : els) by[{el.charge, el.tree}] = &el;
    }
    const TreeBasisElement& at(int charge, const Tree& t) const {
        return *by.at({charge, t});
    }
};

}  // namespace

HomMorphism transport_morphism(const DoubledCategory& dc,
                               const HomMorphism& f) {
    const CategoryData& B = dc.base;
    Word srcU, srcB, tgtU, tgtB;
    for (int p : f.src) {
        srcU.push_back(dc.unpair(p).first);
        srcB.push_back(dc.unpair(p).second);
    }
    for (int p : f.tgt) {
        tgtU.push_back(dc.unpair(p).first);
        tgtB.push_back(dc.unpair(p).second);
    }
    BaseBasis sU(B, srcU), sB(B, srcB), tU(B, tgtU), tB(B, tgtB);

    HomMorphism out =
        hom_zero(B, transport_word(dc, f.src), transport_word(dc, f.tgt));
    for (const auto& [P, M] : f.blocks) {
        auto [c, cb] = dc.unpair(P);
        auto srcTrees = enumerate_trees(dc.cat, f.src, P);
        auto tgtTrees = enumerate_trees(dc.cat, f.tgt, P);
        for (size_t i2 = 0; i2 < tgtTrees.size(); ++i2) {
            auto [t2u, t2b] = split_tree(dc, f.tgt, tgtTrees[i2]);
            HomMorphism inc =
                tensor(tU.at(c, t2u).include, tB.at(cb, t2b).include);
            for (size_t i1 = 0; i1 < srcTrees.size(); ++i1) {
                cplx v = M(long(i2), long(i1));
                if (v == cplx(0.0)) continue;
                auto [t1u, t1b] = split_tree(dc, f.src, srcTrees[i1]);
                HomMorphism term = compose(
                    inc, tensor(sU.at(c, t1u).project, sB.at(cb, t1b).project));
                term *= v;
                out += term;
            }
        }
    }
    return out;
}

HomMorphism transport_interleaver(const DoubledCategory& dc, const Word& w1,
                                  const Word& w2, int sign) {
    const CategoryData& B = dc.base;
    const int m1 = int(w1.size()), m2 = int(w2.size());
    Word cur = transport_word(dc, w1);
    {
        Word t2 = transport_word(dc, w2);
        cur.insert(cur.end(), t2.begin(), t2.end());
    }
    HomMorphism out = hom_identity(B, cur);
    // Move every second-component letter of w1 right past the m2
    // first-component letters of w2, innermost letter first.
    for (int i = m1 - 1; i >= 0; --i) {
        int pos = m1 + i;
        for (int t = 0; t < m2; ++t) {
            out = compose(braid_at(B, cur, pos, sign), out);
            std::swap(cur[size_t(pos)], cur[size_t(pos + 1)]);
            ++pos;
        }
    }
    return out;
}

CheckReport check_double(const CategoryData& base, double tol, int threads) {
    CheckReport rep;
    DoubledCategory dc = build_double(base);
    const int n = base.n();

    {
        Stopwatch sw;
        auto [r, w] = worst_row(validate_category(dc.cat, tol, threads));
        rep.add("double-axioms", r, tol, w, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        auto [r, w] = worst_row(validate_category(reverse_category(base), tol, threads));
        rep.add("reverse-axioms", r, tol, w, sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        cplx Db = base.Dscalar();
        double r = std::abs(dc.cat.Dscalar() - cplx(std::norm(Db)));
        rep.add("total-dimension", r, tol, "", sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        Worst w;
        for (int a = 0; a < n; ++a)
            w.update(std::abs(dc.cat.twists[size_t(dc.pair_index(a, a))] - cplx(1.0)),
                     dc.cat.label(dc.pair_index(a, a)));
        rep.add("diagonal-twists", w.residual, tol, w.witness, sw.elapsed_ms());
    }
    {
        // Unit tower of the double against the Kronecker product of the
        // base tower and the reversed-base tower.
        Stopwatch sw;
        Mat Sd = s_action(dc.cat, dc.cat.unit);
        Mat S1 = s_action(base, base.unit);
        Mat S2 = s_action(reverse_category(base), base.unit);
        Worst w;
        for (int a = 0; a < n; ++a)
            for (int ab = 0; ab < n; ++ab)
                for (int b = 0; b < n; ++b)
                    for (int bb = 0; bb < n; ++bb) {
                        double r = std::abs(Sd(dc.pair_index(a, ab),
                                               dc.pair_index(b, bb)) -
                                            S1(a, b) * S2(ab, bb));
                        w.update(r, dc.cat.label(dc.pair_index(a, ab)) + "," +
                                        dc.cat.label(dc.pair_index(b, bb)));
                    }
        rep.add("unit-tower-factorization", w.residual, tol, w.witness,
                sw.elapsed_ms());
    }

    const int A = dc.pair_index(n - 1, n - 1);
    const int Bp = dc.pair_index(0, n - 1);
    {
        Stopwatch sw;
        HomMorphism g = random_hom(dc.cat, Word{A}, Word{A, Bp}, 11);
        HomMorphism f = random_hom(dc.cat, Word{A, Bp}, Word{A}, 12);
        double r = hom_dist(transport_morphism(dc, compose(f, g)),
                            compose(transport_morphism(dc, f),
                                    transport_morphism(dc, g)));
        rep.add("transport-composition", r, tol, "", sw.elapsed_ms());
    }
    {
        Stopwatch sw;
        HomMorphism id = hom_identity(dc.cat, Word{A, Bp});
        double r = hom_dist(transport_morphism(dc, id),
                            hom_identity(base, transport_word(dc, Word{A, Bp})));
        rep.add("transport-identity", r, tol, "", sw.elapsed_ms());
    }
    {
        // Monoidality square: transporting a tensor product equals the
        // tensor of transports conjugated by the interleavers.
        Stopwatch sw;
        Word s1{A}, t1{A, Bp}, s2{Bp}, t2{A};
        HomMorphism f = random_hom(dc.cat, s1, t1, 21);
        HomMorphism g = random_hom(dc.cat, s2, t2, 22);
        HomMorphism lhs = compose(transport_morphism(dc, tensor(f, g)),
                                  transport_interleaver(dc, s1, s2));
        HomMorphism rhs = compose(transport_interleaver(dc, t1, t2),
                                  tensor(transport_morphism(dc, f),
                                         transport_morphism(dc, g)));
        rep.add("interleaver-naturality", hom_dist(lhs, rhs), tol, "",
                sw.elapsed_ms());
    }
    {
        // The two interleaver routes from a triple product agree.
        Stopwatch sw;
        Word w1{A}, w2{Bp}, w3{A};
        Word w12 = w1, w23 = w2;
        w12.insert(w12.end(), w2.begin(), w2.end());
        w23.insert(w23.end(), w3.begin(), w3.end());
        HomMorphism lhs =
            compose(transport_interleaver(dc, w12, w3),
                    tensor_id_right(transport_interleaver(dc, w1, w2),
                                    transport_word(dc, w3)));
        HomMorphism rhs =
            compose(transport_interleaver(dc, w1, w23),
                    tensor_id_left(transport_word(dc, w1),
                                   transport_interleaver(dc, w2, w3)));
        rep.add("interleaver-associativity", hom_dist(lhs, rhs), tol, "",
                sw.elapsed_ms());
    }
    return rep;
}

}  // namespace mtc
