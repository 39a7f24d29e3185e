#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtc/report.hpp"

namespace mtc {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Thrown by the loader. Axiom failures never throw; they go into CheckReports.
struct CategoryError : std::runtime_error {
    enum class Kind { Parse, Schema, Value };
    Kind kind;
    CategoryError(Kind k, const std::string& msg)
        : std::runtime_error(msg), kind(k) {}
};

// Dense table of fusion multiplicities N_{ab}^c over label indices.
class FusionTable {
public:
    FusionTable() = default;
    explicit FusionTable(int n) : n_(n), tab_(size_t(n) * n * n, 0) {}
    int operator()(int a, int b, int c) const {
        return tab_[(size_t(a) * n_ + b) * n_ + c];
    }
    int& at(int a, int b, int c) { return tab_[(size_t(a) * n_ + b) * n_ + c]; }

private:
    int n_ = 0;
    std::vector<int> tab_;
};

// F-symbol key (a,b,c,d, e,f, i,j,k,l): change of basis on maps a@b@c -> d
// from the tree through e = channel(a,b), vertices i: (a,b)->e, j: (e,c)->d,
// to the tree through f = channel(b,c), vertices k: (b,c)->f, l: (a,f)->d.
using FKey = std::array<int, 10>;

// R-symbol key (a,b,c, i,j): braiding eigendata in channel c, convention
//   vertex_j(b,a->c) after braid(a,b) = sum_i R^{ab}_c[j,i] vertex_i(a,b->c).
using RKey = std::array<int, 5>;

// Complete numeric presentation of a skeletal braided spherical category
// with twists. Immutable after loading; the dense block caches are the only
// mutable state and are mutex guarded.
struct CategoryData {
    std::string name;
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<int> dual;
    FusionTable fusion;
    std::map<FKey, cplx> F;  // absent entries are zero
    std::map<RKey, cplx> R;  // absent entries are zero
    std::vector<double> dims;
    std::vector<cplx> twists;
    std::vector<int> fs;
    double cmod8 = 0.0;
    std::optional<double> cmod24;

    // Copies and moves start with an empty block cache, so mutating the
    // tables of a copy can never see stale blocks.
    CategoryData() = default;
    CategoryData(const CategoryData&);
    CategoryData& operator=(const CategoryData&);
    CategoryData(CategoryData&&) noexcept;
    CategoryData& operator=(CategoryData&&) noexcept;

    int n() const { return int(labels.size()); }
    int N(int a, int b, int c) const { return fusion(a, b, c); }
    bool admissible(int a, int b, int c) const { return fusion(a, b, c) > 0; }
    int label_index(const std::string& s) const;  // -1 when absent
    const std::string& label(int a) const { return labels[a]; }

    cplx Fv(int a, int b, int c, int d, int e, int f, int i = 0, int j = 0,
            int k = 0, int l = 0) const;
    cplx Rv(int a, int b, int c, int i = 0, int j = 0) const;

    // Composite bases of the F block for fixed (a,b,c,d):
    //   left rows  (e,i,j): e ascending, then i < N(a,b,e), then j < N(e,c,d);
    //   right cols (f,k,l): f ascending, then k < N(b,c,f), then l < N(a,f,d).
    std::vector<std::array<int, 3>> fblock_left_basis(int a, int b, int c,
                                                      int d) const;
    std::vector<std::array<int, 3>> fblock_right_basis(int a, int b, int c,
                                                       int d) const;
    // Dense block [left,right] and its inverse; cached.
    const Mat& Fblock(int a, int b, int c, int d) const;
    const Mat& Fblock_inv(int a, int b, int c, int d) const;
    // Braid block: rows = vertices of (b,a)->c, cols = vertices of (a,b)->c.
    Mat Rblock(int a, int b, int c) const;

    // Sum over a of theta_a^{-1} dim_a^2 (plus) / theta_a dim_a^2 (minus).
    cplx p_plus() const;
    cplx p_minus() const;
    // Total dimension scalar D = p_minus e^{-2 pi i c/8}.
    cplx Dscalar() const;

private:
    mutable std::map<std::array<int, 4>, std::pair<Mat, Mat>> fcache_;
    mutable std::mutex fcache_mx_;
};

CategoryData load_category(const std::string& path);
CategoryData parse_category_json(const std::string& text,
                                 const std::string& origin);
std::string save_category(const CategoryData& cat);

// Axiom suite: pentagon, both hexagons, dims against Perron roots, the dim
// equation, ribbon balancing, unit/dual/twist scalars, F-block invertibility,
// charge relation between p_plus, p_minus and D. Failures are reported, not
// thrown. threads > 1 splits the pentagon/hexagon sweeps.
CheckReport validate_category(const CategoryData& cat, double tol = 1e-9,
                              int threads = 1);

struct MirrorCharge {
    double value = 0.0;  // representative in (-4, 4]
    bool degenerate = false;
    std::string note;
};

// The c mod 8 that makes p_minus e^{-2 pi i c/8} real positive, rationalized
// with small denominator when possible.
MirrorCharge mirror_charge_hint(const CategoryData& cat);

}  // namespace mtc
