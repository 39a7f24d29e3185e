#include "mtc/homspace.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace mtc {

namespace {

// Interleaved comparison key (charges[1], mults[0], charges[2], ...).
std::vector<int> interleave(const Tree& t) {
    std::vector<int> key;
    for (size_t k = 1; k < t.charges.size(); ++k) {
        key.push_back(t.charges[k]);
        key.push_back(t.mults[k - 1]);
    }
    return key;
}

void enumerate_rec(const CategoryData& cat, const Word& w, int charge,
                   Tree& cur, size_t pos, std::vector<Tree>& out) {
    if (pos == w.size()) {
        int total = cur.charges.empty() ? cat.unit : cur.charges.back();
        if (total == charge) out.push_back(cur);
        return;
    }
    int x = cur.charges.empty() ? cat.unit : cur.charges.back();
    if (cur.charges.empty()) {
        // First letter: the running charge is the letter itself.
        cur.charges.push_back(w[pos]);
        enumerate_rec(cat, w, charge, cur, pos + 1, out);
        cur.charges.pop_back();
        return;
    }
    for (int y = 0; y < cat.n(); ++y) {
        int nm = cat.N(x, w[pos], y);
        for (int m = 0; m < nm; ++m) {
            cur.charges.push_back(y);
            cur.mults.push_back(m);
            enumerate_rec(cat, w, charge, cur, pos + 1, out);
            cur.charges.pop_back();
            cur.mults.pop_back();
        }
    }
}

struct TreeIndexer {
    std::vector<Tree> trees;
    std::map<Tree, int> pos;
    explicit TreeIndexer(std::vector<Tree> t) : trees(std::move(t)) {
        for (size_t i = 0; i < trees.size(); ++i) pos[trees[i]] = int(i);
    }
    int find(const Tree& t) const {
        auto it = pos.find(t);
        return it == pos.end() ? -1 : it->second;
    }
    long size() const { return long(trees.size()); }
};

TreeIndexer indexer(const CategoryData& cat, const Word& w, int c) {
    return TreeIndexer(enumerate_trees(cat, w, c));
}

// Split of a tree over w at letter position k: the prefix tree over
// w[0..k-1] with total charge y, and the continuation over the word
// (y, w[k..]). cont.charges[0] = y, so continuation equality pins y too.
struct Split {
    Tree prefix;
    int y;
    Tree cont;
};

Split split_at(const CategoryData& cat, const Tree& t, size_t k) {
    Split s;
    if (k == 0) {
        s.y = cat.unit;
        s.cont.charges.reserve(t.charges.size() + 1);
        s.cont.charges.push_back(cat.unit);
        // Absorbing the first real letter from the unit has a single vertex.
        if (!t.charges.empty()) {
            s.cont.charges.insert(s.cont.charges.end(), t.charges.begin(),
                                  t.charges.end());
            s.cont.mults.push_back(0);
            s.cont.mults.insert(s.cont.mults.end(), t.mults.begin(),
                                t.mults.end());
        }
        return s;
    }
    s.prefix.charges.assign(t.charges.begin(), t.charges.begin() + k);
    s.prefix.mults.assign(t.mults.begin(), t.mults.begin() + (k - 1));
    s.y = t.charges[k - 1];
    s.cont.charges.assign(t.charges.begin() + (k - 1), t.charges.end());
    s.cont.mults.assign(t.mults.begin() + (k - 1), t.mults.end());
    return s;
}

// Merged basis of maps x (x) U -> t: (u, tree of U at u, m < N(x,u,t)),
// ordered by u, then tree position, then m.
struct MergedBasis {
    std::vector<std::array<int, 3>> items;  // (u, tree index, m)
    std::map<std::array<int, 3>, int> pos;
    void push(int u, int it, int m) {
        pos[{u, it, m}] = int(items.size());
        items.push_back({u, it, m});
    }
    int find(int u, int it, int m) const {
        auto p = pos.find({u, it, m});
        return p == pos.end() ? -1 : p->second;
    }
};

MergedBasis merged_basis(const CategoryData& cat, int x,
                         const std::vector<TreeIndexer>& utrees, int t) {
    MergedBasis b;
    for (int u = 0; u < cat.n(); ++u)
        for (int it = 0; it < utrees[u].size(); ++it)
            for (int m = 0; m < cat.N(x, u, t); ++m) b.push(u, it, m);
    return b;
}

// Coordinates of the merged-basis maps E^t_{xu;m} (id_x (x) E_{T_U}) in the
// standard tree basis of the word (x)+U, built by absorbing U letter by
// letter through the recoupling inverse.
struct MergeData {
    // Per total charge: basis of trees of (x)+prefix, trees of prefix, and
    // the matrix with rows = standard trees, cols = merged basis.
    std::vector<TreeIndexer> xtrees;
    std::vector<TreeIndexer> utrees;
    std::vector<MergedBasis> basis;
    std::vector<Mat> m;
};

MergeData merge_matrices(const CategoryData& cat, int x, const Word& U) {
    int n = cat.n();
    MergeData cur;
    // Base: empty prefix.
    for (int t = 0; t < n; ++t) {
        cur.xtrees.push_back(indexer(cat, Word{x}, t));
        cur.utrees.push_back(indexer(cat, Word{}, t));
    }
    for (int t = 0; t < n; ++t) {
        cur.basis.push_back(merged_basis(cat, x, cur.utrees, t));
        cur.m.push_back(t == x ? Mat(Mat::Identity(1, 1)) : Mat(Mat::Zero(0, 0)));
    }
    Word prefix;
    for (int a : U) {
        Word xprefix{x};
        xprefix.insert(xprefix.end(), prefix.begin(), prefix.end());
        prefix.push_back(a);
        xprefix.push_back(a);
        MergeData next;
        for (int t = 0; t < n; ++t) {
            next.xtrees.push_back(indexer(cat, xprefix, t));
            next.utrees.push_back(indexer(cat, prefix, t));
        }
        for (int t = 0; t < n; ++t) {
            next.basis.push_back(merged_basis(cat, x, next.utrees, t));
            Mat m = Mat::Zero(next.xtrees[t].size(),
                              long(next.basis[t].items.size()));
            for (int col = 0; col < int(next.basis[t].items.size()); ++col) {
                auto [u, itu, mm] = next.basis[t].items[col];
                const Tree& tu = next.utrees[u].trees[itu];
                // Last step of tu: prefix tree at w, vertex k: (w,a)->u.
                Split sp = split_at(cat, tu, prefix.size() - 1);
                int w = sp.y;
                int k = prefix.size() == 1 ? 0 : tu.mults.back();
                int itu_prev =
                    prefix.size() == 1 ? 0 : -1;
                if (prefix.size() > 1) itu_prev = cur.utrees[w].find(sp.prefix);
                if (itu_prev < 0) continue;
                auto lb = cat.fblock_left_basis(x, w, a, t);
                auto rb = cat.fblock_right_basis(x, w, a, t);
                const Mat& finv = cat.Fblock_inv(x, w, a, t);
                long rpos = -1;
                for (size_t s = 0; s < rb.size(); ++s)
                    if (rb[s] == std::array<int, 3>{u, k, mm}) rpos = long(s);
                if (rpos < 0) continue;
                for (size_t s = 0; s < lb.size(); ++s) {
                    auto [y, i, j] = lb[s];
                    int colprev = cur.basis[size_t(y)].find(w, itu_prev, i);
                    if (colprev < 0) continue;
                    cplx coeff = finv(rpos, long(s));
                    if (coeff == cplx(0.0)) continue;
                    const Mat& prev_block = cur.m[size_t(y)];
                    // Standard trees of (x)+prefix+a at t with last step
                    // (y, j): row index via explicit lookup.
                    for (int rprev = 0; rprev < cur.xtrees[size_t(y)].size();
                         ++rprev) {
                        cplx base = prev_block(rprev, colprev);
                        if (base == cplx(0.0)) continue;
                        Tree full = cur.xtrees[size_t(y)].trees[size_t(rprev)];
                        full.charges.push_back(t);
                        full.mults.push_back(j);
                        int row = next.xtrees[t].find(full);
                        if (row >= 0) m(row, col) += coeff * base;
                    }
                }
            }
            next.m.push_back(std::move(m));
        }
        cur = std::move(next);
    }
    return cur;
}

HomMorphism tensor_single_left(int x, const HomMorphism& g) {
    const CategoryData& cat = *g.cat;
    Word src{x}, tgt{x};
    src.insert(src.end(), g.src.begin(), g.src.end());
    tgt.insert(tgt.end(), g.tgt.begin(), g.tgt.end());
    HomMorphism h = hom_zero(cat, src, tgt);
    MergeData mu = merge_matrices(cat, x, g.src);
    MergeData mv = merge_matrices(cat, x, g.tgt);
    for (int t = 0; t < cat.n(); ++t) {
        long rows = mv.xtrees[t].size(), cols = mu.xtrees[t].size();
        if (!rows || !cols) continue;
        const MergedBasis& bu = mu.basis[t];
        const MergedBasis& bv = mv.basis[t];
        Mat gh = Mat::Zero(long(bv.items.size()), long(bu.items.size()));
        bool any = false;
        for (int col = 0; col < int(bu.items.size()); ++col) {
            auto [u, itu, m] = bu.items[col];
            auto git = g.blocks.find(u);
            if (git == g.blocks.end()) continue;
            for (int itv = 0; itv < mv.utrees[u].size(); ++itv) {
                cplx v = git->second(itv, itu);
                if (v == cplx(0.0)) continue;
                int row = bv.find(u, itv, m);
                if (row < 0) continue;
                gh(row, col) = v;
                any = true;
            }
        }
        if (!any) continue;
        Mat block = mv.m[t].transpose().inverse() * gh * mu.m[t].transpose();
        h.blocks[t] = std::move(block);
    }
    return h;
}

std::uint64_t splitmix(std::uint64_t& s) {
    s += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

bool Tree::operator<(const Tree& o) const {
    return interleave(*this) < interleave(o);
}

std::vector<Tree> enumerate_trees(const CategoryData& cat, const Word& w,
                                  int charge) {
    std::vector<Tree> out;
    if (w.empty()) {
        if (charge == cat.unit) out.push_back(Tree{});
        return out;
    }
    Tree cur;
    enumerate_rec(cat, w, charge, cur, 0, out);
    return out;
}

long tree_count(const CategoryData& cat, const Word& w, int charge) {
    if (w.empty()) return charge == cat.unit ? 1 : 0;
    std::vector<long> v(size_t(cat.n()), 0);
    v[size_t(w[0])] = 1;
    for (size_t k = 1; k < w.size(); ++k) {
        std::vector<long> nv(size_t(cat.n()), 0);
        for (int x = 0; x < cat.n(); ++x) {
            if (!v[size_t(x)]) continue;
            for (int y = 0; y < cat.n(); ++y)
                nv[size_t(y)] += v[size_t(x)] * cat.N(x, w[k], y);
        }
        v = std::move(nv);
    }
    return v[size_t(charge)];
}

Mat HomMorphism::block_or_zero(int c) const {
    auto it = blocks.find(c);
    if (it != blocks.end()) return it->second;
    return Mat::Zero(tree_count(*cat, tgt, c), tree_count(*cat, src, c));
}

HomMorphism& HomMorphism::operator*=(cplx s) {
    for (auto& [c, m] : blocks) m *= s;
    return *this;
}

HomMorphism& HomMorphism::operator+=(const HomMorphism& o) {
    if (!matches(o)) throw std::logic_error("hom add: word mismatch");
    for (const auto& [c, m] : o.blocks) {
        auto it = blocks.find(c);
        if (it == blocks.end())
            blocks[c] = m;
        else
            it->second += m;
    }
    return *this;
}

HomMorphism hom_zero(const CategoryData& cat, Word src, Word tgt) {
    HomMorphism h;
    h.cat = &cat;
    h.src = std::move(src);
    h.tgt = std::move(tgt);
    return h;
}

HomMorphism hom_identity(const CategoryData& cat, Word w) {
    HomMorphism h = hom_zero(cat, w, w);
    for (int c = 0; c < cat.n(); ++c) {
        long k = tree_count(cat, w, c);
        if (k) h.blocks[c] = Mat::Identity(k, k);
    }
    return h;
}

double hom_dist(const HomMorphism& f, const HomMorphism& g) {
    if (!f.matches(g)) throw std::logic_error("hom dist: word mismatch");
    double d = 0.0;
    for (int c = 0; c < f.cat->n(); ++c) {
        bool inf = f.blocks.count(c), ing = g.blocks.count(c);
        if (!inf && !ing) continue;
        Mat diff = f.block_or_zero(c) - g.block_or_zero(c);
        if (diff.size()) d = std::max(d, diff.cwiseAbs().maxCoeff());
    }
    return d;
}

double hom_norm(const HomMorphism& f) {
    double d = 0.0;
    for (const auto& [c, m] : f.blocks)
        if (m.size()) d = std::max(d, m.cwiseAbs().maxCoeff());
    return d;
}

HomMorphism random_hom(const CategoryData& cat, Word src, Word tgt,
                       std::uint64_t seed) {
    HomMorphism h = hom_zero(cat, std::move(src), std::move(tgt));
    std::uint64_t state = seed;
    for (int c = 0; c < cat.n(); ++c) {
        long r = tree_count(cat, h.tgt, c), s = tree_count(cat, h.src, c);
        if (!r || !s) continue;
        Mat m(r, s);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < s; ++j) {
                double re = double(splitmix(state) >> 11) / double(1ULL << 53);
                double im = double(splitmix(state) >> 11) / double(1ULL << 53);
                m(i, j) = cplx(2.0 * re - 1.0, 2.0 * im - 1.0);
            }
        h.blocks[c] = std::move(m);
    }
    return h;
}

HomMorphism vertex(const CategoryData& cat, int a, int b, int c, int m) {
    HomMorphism h = hom_zero(cat, Word{a, b}, Word{c});
    int k = cat.N(a, b, c);
    if (m < 0 || m >= k) throw std::logic_error("vertex: bad multiplicity");
    Mat blk = Mat::Zero(1, k);
    blk(0, m) = 1.0;
    h.blocks[c] = std::move(blk);
    return h;
}

HomMorphism covertex(const CategoryData& cat, int a, int b, int c, int m) {
    HomMorphism h = hom_zero(cat, Word{c}, Word{a, b});
    int k = cat.N(a, b, c);
    if (m < 0 || m >= k) throw std::logic_error("covertex: bad multiplicity");
    Mat blk = Mat::Zero(k, 1);
    blk(m, 0) = 1.0;
    h.blocks[c] = std::move(blk);
    return h;
}

HomMorphism compose(const HomMorphism& f, const HomMorphism& g) {
    if (f.src != g.tgt) throw std::logic_error("compose: word mismatch");
    HomMorphism h = hom_zero(*f.cat, g.src, f.tgt);
    for (const auto& [c, fm] : f.blocks) {
        auto it = g.blocks.find(c);
        if (it == g.blocks.end()) continue;
        Mat m = fm * it->second;
        if (m.size()) h.blocks[c] = std::move(m);
    }
    return h;
}

HomMorphism tensor_id_right(const HomMorphism& f, const Word& u) {
    const CategoryData& cat = *f.cat;
    Word src = f.src, tgt = f.tgt;
    src.insert(src.end(), u.begin(), u.end());
    tgt.insert(tgt.end(), u.begin(), u.end());
    HomMorphism h = hom_zero(cat, src, tgt);
    size_t ks = f.src.size(), kt = f.tgt.size();
    for (int t = 0; t < cat.n(); ++t) {
        auto strees = enumerate_trees(cat, src, t);
        auto ttrees = enumerate_trees(cat, tgt, t);
        if (strees.empty() || ttrees.empty()) continue;
        // Group target trees by continuation.
        std::map<Tree, std::vector<std::pair<int, std::pair<int, Tree>>>> bycont;
        for (size_t r = 0; r < ttrees.size(); ++r) {
            Split sp = split_at(cat, ttrees[r], kt);
            bycont[sp.cont].push_back({int(r), {sp.y, sp.prefix}});
        }
        std::map<int, TreeIndexer> ysrc, ytgt;
        Mat m = Mat::Zero(long(ttrees.size()), long(strees.size()));
        bool any = false;
        for (size_t col = 0; col < strees.size(); ++col) {
            Split sp = split_at(cat, strees[col], ks);
            auto fit = f.blocks.find(sp.y);
            if (fit == f.blocks.end()) continue;
            auto cit = bycont.find(sp.cont);
            if (cit == bycont.end()) continue;
            if (!ysrc.count(sp.y)) ysrc.emplace(sp.y, indexer(cat, f.src, sp.y));
            int colX = ysrc.at(sp.y).find(sp.prefix);
            for (const auto& [row, ypref] : cit->second) {
                if (ypref.first != sp.y) continue;
                if (!ytgt.count(sp.y))
                    ytgt.emplace(sp.y, indexer(cat, f.tgt, sp.y));
                int rowY = ytgt.at(sp.y).find(ypref.second);
                cplx v = fit->second(rowY, colX);
                if (v == cplx(0.0)) continue;
                m(row, long(col)) = v;
                any = true;
            }
        }
        if (any) h.blocks[t] = std::move(m);
    }
    return h;
}

HomMorphism tensor_id_left(const Word& x, const HomMorphism& g) {
    HomMorphism h = g;
    for (size_t i = x.size(); i-- > 0;) h = tensor_single_left(x[i], h);
    return h;
}

HomMorphism tensor(const HomMorphism& f, const HomMorphism& g) {
    return compose(tensor_id_right(f, g.tgt), tensor_id_left(f.src, g));
}

namespace {

HomMorphism pairing_gen(const CategoryData& cat, Word src, Word tgt,
                        cplx value) {
    HomMorphism h = hom_zero(cat, std::move(src), std::move(tgt));
    h.blocks[cat.unit] = Mat::Constant(1, 1, value);
    return h;
}

// Rotation coefficient relating the two closures of the identity:
// t_a = theta_a R^{a a'}_unit.
cplx rotation_coeff(const CategoryData& cat, int a) {
    return cat.twists[size_t(a)] * cat.Rv(a, cat.dual[size_t(a)], cat.unit);
}

}  // namespace

HomMorphism cap(const CategoryData& cat, int a) {
    return pairing_gen(cat, Word{cat.dual[size_t(a)], a}, Word{}, 1.0);
}

HomMorphism cap_left(const CategoryData& cat, int a) {
    return pairing_gen(cat, Word{a, cat.dual[size_t(a)]}, Word{},
                       rotation_coeff(cat, a));
}

HomMorphism cup(const CategoryData& cat, int a) {
    return pairing_gen(cat, Word{}, Word{a, cat.dual[size_t(a)]},
                       cat.dims[size_t(a)] / rotation_coeff(cat, a));
}

HomMorphism cup_left(const CategoryData& cat, int a) {
    return pairing_gen(cat, Word{}, Word{cat.dual[size_t(a)], a},
                       cat.dims[size_t(a)]);
}

HomMorphism braid_pair(const CategoryData& cat, int a, int b, int sign) {
    HomMorphism h = hom_zero(cat, Word{a, b}, Word{b, a});
    for (int c = 0; c < cat.n(); ++c) {
        if (!cat.admissible(a, b, c)) continue;
        if (sign > 0)
            h.blocks[c] = cat.Rblock(a, b, c);
        else
            h.blocks[c] = cat.Rblock(b, a, c).inverse();
    }
    return h;
}

HomMorphism braid_at(const CategoryData& cat, const Word& w, int pos,
                     int sign) {
    if (pos < 0 || pos + 1 >= int(w.size()))
        throw std::logic_error("braid_at: bad position");
    Word prefix(w.begin(), w.begin() + pos);
    Word suffix(w.begin() + pos + 2, w.end());
    HomMorphism b = braid_pair(cat, w[size_t(pos)], w[size_t(pos) + 1], sign);
    return tensor_id_left(prefix, tensor_id_right(b, suffix));
}

HomMorphism ptr_last(const HomMorphism& f) {
    const CategoryData& cat = *f.cat;
    if (f.src.empty() || f.tgt.empty() || f.src.back() != f.tgt.back())
        throw std::logic_error("ptr_last: last letters must agree");
    int a = f.src.back();
    Word X(f.src.begin(), f.src.end() - 1);
    Word Y(f.tgt.begin(), f.tgt.end() - 1);
    HomMorphism open_pair = tensor_id_left(X, cup(cat, a));
    HomMorphism middle = tensor_id_right(f, Word{cat.dual[size_t(a)]});
    HomMorphism close = tensor_id_left(Y, cap_left(cat, a));
    return compose(close, compose(middle, open_pair));
}

cplx qtrace(const HomMorphism& f) {
    if (f.src != f.tgt) throw std::logic_error("qtrace: not an endomorphism");
    HomMorphism cur = f;
    while (!cur.src.empty()) cur = ptr_last(cur);
    auto it = cur.blocks.find(cur.cat->unit);
    return it == cur.blocks.end() ? cplx(0.0) : it->second(0, 0);
}

std::vector<TreeBasisElement> resolve_identity(const CategoryData& cat,
                                               const Word& w) {
    std::vector<TreeBasisElement> out;
    for (int c = 0; c < cat.n(); ++c) {
        auto trees = enumerate_trees(cat, w, c);
        for (size_t i = 0; i < trees.size(); ++i) {
            TreeBasisElement el;
            el.charge = c;
            el.tree = trees[i];
            el.project = hom_zero(cat, w, Word{c});
            Mat pm = Mat::Zero(1, long(trees.size()));
            pm(0, long(i)) = 1.0;
            el.project.blocks[c] = std::move(pm);
            el.include = hom_zero(cat, Word{c}, w);
            Mat im = Mat::Zero(long(trees.size()), 1);
            im(long(i), 0) = 1.0;
            el.include.blocks[c] = std::move(im);
            out.push_back(std::move(el));
        }
    }
    return out;
}

}  // namespace mtc
