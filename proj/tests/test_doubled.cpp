#include <cmath>
#include <complex>

#include "doctest.h"
#include "mtc/builtin.hpp"
#include "mtc/doubled.hpp"
#include "mtc/modular.hpp"

using namespace mtc;

TEST_CASE("reversed category swaps braiding chirality and stays valid") {
    CategoryData fib = make_fibonacci();
    CategoryData rev = reverse_category(fib);
    int tau = fib.label_index("tau");
    int e = fib.unit;

    CHECK(std::abs(rev.Rv(tau, tau, e) * fib.Rv(tau, tau, e) - cplx(1.0)) <
          1e-12);
    CHECK(std::abs(rev.twists[size_t(tau)] * fib.twists[size_t(tau)] -
                   cplx(1.0)) < 1e-12);
    CHECK(rev.cmod8 == doctest::Approx(-fib.cmod8));

    CheckReport rep = validate_category(rev, 1e-9);
    CHECK(rep.all_pass());

    CategoryData revrev = reverse_category(rev);
    CHECK(std::abs(revrev.Rv(tau, tau, e) - fib.Rv(tau, tau, e)) < 1e-12);
}

TEST_CASE("double of the trivial category is trivial") {
    DoubledCategory dc = build_double(make_trivial());
    CHECK(dc.cat.n() == 1);
    CHECK(dc.cat.dims[0] == doctest::Approx(1.0));
    CHECK(std::abs(dc.cat.twists[0] - cplx(1.0)) < 1e-15);
    CHECK(validate_category(dc.cat, 1e-9).all_pass());
}

TEST_CASE("golden double has four labels and squared total dimension") {
    CategoryData fib = make_fibonacci();
    DoubledCategory dc = build_double(fib);
    CHECK(dc.cat.n() == 4);

    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(dc.cat.Dscalar().real() == doctest::Approx((2.0 + phi)).epsilon(1e-12));
    CHECK(std::abs(dc.cat.Dscalar().imag()) < 1e-12);

    int tt = dc.pair_index(fib.label_index("tau"), fib.label_index("tau"));
    int te = dc.pair_index(fib.label_index("tau"), fib.unit);
    CHECK(dc.cat.label(tt) == "(tau,tau)");
    CHECK(std::abs(dc.cat.twists[size_t(tt)] - cplx(1.0)) < 1e-12);
    CHECK(std::abs(dc.cat.twists[size_t(te)] - fib.twists[size_t(
                       fib.label_index("tau"))]) < 1e-12);
    CHECK(dc.cat.dims[size_t(tt)] == doctest::Approx(phi * phi));
}

TEST_CASE("doubles of the built-in categories satisfy the axiom suite") {
    for (const char* name : {"fibonacci", "ising", "z3"}) {
        CategoryData base = builtin_by_name(name);
        DoubledCategory dc = build_double(base);
        CheckReport rep = validate_category(dc.cat, 1e-9, 4);
        INFO(name);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("transported objects decompose by fusion") {
    CategoryData ising = make_ising();
    DoubledCategory dci = build_double(ising);
    int sg = ising.label_index("sigma");
    int ep = ising.label_index("eps");

    auto u = transport_object(dci, Word{dci.cat.unit});
    CHECK(u[size_t(ising.unit)] == 1);
    CHECK(u[size_t(ep)] == 0);
    CHECK(u[size_t(sg)] == 0);

    auto m = transport_object(dci, Word{dci.pair_index(sg, sg)});
    CHECK(m[size_t(ising.unit)] == 1);
    CHECK(m[size_t(ep)] == 1);
    CHECK(m[size_t(sg)] == 0);

    CategoryData fib = make_fibonacci();
    DoubledCategory dcf = build_double(fib);
    int tau = fib.label_index("tau");
    auto f = transport_object(dcf, Word{dcf.pair_index(tau, tau)});
    CHECK(f[size_t(fib.unit)] == 1);
    CHECK(f[size_t(tau)] == 1);
}

TEST_CASE("transport splits pair words into component blocks") {
    CategoryData ising = make_ising();
    DoubledCategory dc = build_double(ising);
    int sg = ising.label_index("sigma");
    int ep = ising.label_index("eps");
    Word dw{dc.pair_index(sg, ep), dc.pair_index(ep, sg)};
    CHECK(transport_word(dc, dw) == Word{sg, ep, ep, sg});
}

TEST_CASE("transport is functorial on random morphisms") {
    CategoryData fib = make_fibonacci();
    DoubledCategory dc = build_double(fib);
    int tau = fib.label_index("tau");
    int tt = dc.pair_index(tau, tau);
    int te = dc.pair_index(tau, fib.unit);

    HomMorphism g = random_hom(dc.cat, Word{tt}, Word{tt, te}, 101);
    HomMorphism f = random_hom(dc.cat, Word{tt, te}, Word{tt, tt}, 102);
    double r = hom_dist(transport_morphism(dc, compose(f, g)),
                        compose(transport_morphism(dc, f),
                                transport_morphism(dc, g)));
    CHECK(r < 1e-12);

    HomMorphism id = hom_identity(dc.cat, Word{tt, te});
    CHECK(hom_dist(transport_morphism(dc, id),
                   hom_identity(fib, transport_word(dc, Word{tt, te}))) <
          1e-12);
}

TEST_CASE("interleaver square commutes on random morphisms") {
    CategoryData ising = make_ising();
    DoubledCategory dc = build_double(ising);
    int sg = ising.label_index("sigma");
    int ss = dc.pair_index(sg, sg);
    int es = dc.pair_index(ising.label_index("eps"), sg);

    Word s1{ss}, t1{ss, es}, s2{es}, t2{ss};
    HomMorphism f = random_hom(dc.cat, s1, t1, 7);
    HomMorphism g = random_hom(dc.cat, s2, t2, 8);
    HomMorphism lhs = compose(transport_morphism(dc, tensor(f, g)),
                              transport_interleaver(dc, s1, s2));
    HomMorphism rhs = compose(transport_interleaver(dc, t1, t2),
                              tensor(transport_morphism(dc, f),
                                     transport_morphism(dc, g)));
    CHECK(hom_dist(lhs, rhs) < 1e-10);
}

TEST_CASE("unit tower of a double factorizes over the two chiralities") {
    for (const char* name : {"fibonacci", "ising"}) {
        CategoryData base = builtin_by_name(name);
        DoubledCategory dc = build_double(base);
        Mat Sd = s_action(dc.cat, dc.cat.unit);
        Mat S1 = s_action(base, base.unit);
        Mat S2 = s_action(reverse_category(base), base.unit);
        double worst = 0.0;
        for (int a = 0; a < base.n(); ++a)
            for (int ab = 0; ab < base.n(); ++ab)
                for (int b = 0; b < base.n(); ++b)
                    for (int bb = 0; bb < base.n(); ++bb)
                        worst = std::max(
                            worst, std::abs(Sd(dc.pair_index(a, ab),
                                               dc.pair_index(b, bb)) -
                                            S1(a, b) * S2(ab, bb)));
        INFO(name);
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("double invariant suite passes for every built-in category") {
    for (const std::string& name : builtin_names()) {
        CheckReport rep = check_double(builtin_by_name(name), 1e-9, 4);
        INFO(name);
        for (const auto& c : rep.checks) {
            INFO(c.name, " residual ", c.residual);
            CHECK(c.pass);
        }
    }
}
