#include "mtc/builtin.hpp"

#include <cmath>
#include <functional>

namespace mtc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fills every admissible multiplicity-free F and R entry from the callbacks.
// Unit-label blocks must come out as 1 for the tree bases to be coherent.
void fill_symbols(CategoryData& cat,
                  const std::function<cplx(int, int, int, int, int, int)>& fv,
                  const std::function<cplx(int, int, int)>& rv) {
    int n = cat.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    for (int e = 0; e < n; ++e) {
                        if (!cat.N(a, b, e) || !cat.N(e, c, d)) continue;
                        for (int f = 0; f < n; ++f) {
                            if (!cat.N(b, c, f) || !cat.N(a, f, d)) continue;
                            cat.F[FKey{a, b, c, d, e, f, 0, 0, 0, 0}] =
                                fv(a, b, c, d, e, f);
                        }
                    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (cat.N(a, b, c)) cat.R[RKey{a, b, c, 0, 0}] = rv(a, b, c);
}

void add_unit_fusion(CategoryData& cat) {
    int n = cat.n();
    for (int a = 0; a < n; ++a) {
        cat.fusion.at(cat.unit, a, a) = 1;
        cat.fusion.at(a, cat.unit, a) = 1;
    }
}

}  // namespace

CategoryData make_trivial() {
    CategoryData cat;
    cat.name = "trivial";
    cat.labels = {"1"};
    cat.unit = 0;
    cat.dual = {0};
    cat.fusion = FusionTable(1);
    cat.fusion.at(0, 0, 0) = 1;
    cat.dims = {1.0};
    cat.twists = {cplx(1.0)};
    cat.fs = {1};
    cat.cmod8 = 0.0;
    fill_symbols(
        cat, [](int, int, int, int, int, int) { return cplx(1.0); },
        [](int, int, int) { return cplx(1.0); });
    return cat;
}

CategoryData make_fibonacci() {
    CategoryData cat;
    cat.name = "fibonacci";
    cat.labels = {"1", "tau"};
    cat.unit = 0;
    cat.dual = {0, 1};
    cat.fusion = FusionTable(2);
    add_unit_fusion(cat);
    cat.fusion.at(1, 1, 0) = 1;
    cat.fusion.at(1, 1, 1) = 1;
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    cat.dims = {1.0, phi};
    cat.twists = {cplx(1.0), std::polar(1.0, -4.0 * kPi / 5.0)};
    cat.fs = {1, 1};
    cat.cmod8 = -14.0 / 5.0;
    fill_symbols(
        cat,
        [phi](int a, int b, int c, int d, int e, int f) -> cplx {
            if (a == 1 && b == 1 && c == 1 && d == 1) {
                if (e == 0 && f == 0) return 1.0 / phi;
                if (e == 1 && f == 1) return -1.0 / phi;
                return 1.0 / std::sqrt(phi);
            }
            return 1.0;
        },
        [](int a, int b, int c) -> cplx {
            if (a == 1 && b == 1)
                return c == 0 ? std::polar(1.0, 4.0 * kPi / 5.0)
                              : std::polar(1.0, -3.0 * kPi / 5.0);
            return 1.0;
        });
    return cat;
}

CategoryData make_ising() {
    CategoryData cat;
    cat.name = "ising";
    cat.labels = {"1", "eps", "sigma"};
    cat.unit = 0;
    cat.dual = {0, 1, 2};
    cat.fusion = FusionTable(3);
    add_unit_fusion(cat);
    cat.fusion.at(1, 1, 0) = 1;
    cat.fusion.at(1, 2, 2) = 1;
    cat.fusion.at(2, 1, 2) = 1;
    cat.fusion.at(2, 2, 0) = 1;
    cat.fusion.at(2, 2, 1) = 1;
    const double rt2 = std::sqrt(2.0);
    cat.dims = {1.0, 1.0, rt2};
    cat.twists = {cplx(1.0), cplx(-1.0), std::polar(1.0, -kPi / 8.0)};
    cat.fs = {1, 1, 1};
    cat.cmod8 = -0.5;
    fill_symbols(
        cat,
        [rt2](int a, int b, int c, int d, int e, int f) -> cplx {
            if (a == 2 && b == 2 && c == 2 && d == 2)
                return (e == 1 && f == 1) ? -1.0 / rt2 : 1.0 / rt2;
            if (a == 1 && b == 2 && c == 1 && d == 2) return -1.0;
            if (a == 2 && b == 1 && c == 2 && d == 1) return -1.0;
            return 1.0;
        },
        [](int a, int b, int c) -> cplx {
            if (a == 1 && b == 1) return -1.0;
            if ((a == 1 && b == 2) || (a == 2 && b == 1)) return cplx(0.0, 1.0);
            if (a == 2 && b == 2)
                return c == 0 ? std::polar(1.0, kPi / 8.0)
                              : std::polar(1.0, -3.0 * kPi / 8.0);
            return 1.0;
        });
    return cat;
}

CategoryData make_z3() {
    CategoryData cat;
    cat.name = "z3";
    cat.labels = {"0", "1", "2"};
    cat.unit = 0;
    cat.dual = {0, 2, 1};
    cat.fusion = FusionTable(3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) cat.fusion.at(a, b, (a + b) % 3) = 1;
    cat.dims = {1.0, 1.0, 1.0};
    cplx omega = std::polar(1.0, -2.0 * kPi / 3.0);
    cat.twists = {cplx(1.0), omega, omega};
    cat.fs = {1, 1, 1};
    cat.cmod8 = -2.0;
    fill_symbols(
        cat, [](int, int, int, int, int, int) { return cplx(1.0); },
        [](int a, int b, int) {
            return std::polar(1.0, -2.0 * kPi * double(a * b) / 3.0);
        });
    return cat;
}

CategoryData builtin_by_name(const std::string& name) {
    if (name == "trivial") return make_trivial();
    if (name == "fibonacci") return make_fibonacci();
    if (name == "ising") return make_ising();
    if (name == "z3") return make_z3();
    throw CategoryError(CategoryError::Kind::Schema,
                        "unknown built-in category '" + name + "'");
}

std::vector<std::string> builtin_names() {
    return {"trivial", "fibonacci", "ising", "z3"};
}

}  // namespace mtc
