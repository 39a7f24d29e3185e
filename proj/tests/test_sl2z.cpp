#include <cmath>

#include "doctest.h"
#include "mtc/builtin.hpp"
#include "mtc/sl2z.hpp"

using namespace mtc;

namespace {

double dist(const Mat& A, const Mat& B) {
    if (!A.size() && !B.size()) return 0.0;
    return (A - B).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("two-point space dimensions count admissible quadruples") {
    CategoryData fib = make_fibonacci();
    CHECK(two_point_index(fib, 1, 1).size() == 3);
    CHECK(two_point_index(fib, 0, 0).size() == 2);
    CHECK(two_point_index(fib, 0, 1).size() == 1);

    CategoryData ising = make_ising();
    CHECK(two_point_index(ising, 2, 2).size() == 4);
    CHECK(two_point_index(ising, 0, 0).size() == 3);

    CategoryData z3 = make_z3();
    CHECK(two_point_index(z3, 2, 2).size() == 0);
    CHECK(two_point_index(z3, 1, 2).size() == 3);
}

TEST_CASE("trivial category translations are the identity") {
    CategoryData C = make_trivial();
    Mat A = alpha_matrix(C, 0, 0);
    Mat B = beta_matrix(C, 0, 0);
    REQUIRE(A.rows() == 1);
    REQUIRE(B.rows() == 1);
    CHECK(std::abs(A(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(B(0, 0) - 1.0) < 1e-12);
}

TEST_CASE("block assembly and diagram evaluation agree for alpha") {
    for (const std::string& nm : builtin_names()) {
        CategoryData C = builtin_by_name(nm);
        for (int a2 = 0; a2 < C.n(); ++a2)
            for (int a3 = 0; a3 < C.n(); ++a3) {
                if (!two_point_index(C, a2, a3).size()) continue;
                CAPTURE(nm);
                CAPTURE(a2);
                CAPTURE(a3);
                CHECK(dist(alpha_matrix(C, a2, a3),
                           alpha_matrix_diagram(C, a2, a3)) < 1e-9);
            }
    }
}

TEST_CASE("block assembly and diagram evaluation agree for beta") {
    for (const std::string& nm : builtin_names()) {
        CategoryData C = builtin_by_name(nm);
        for (int a2 = 0; a2 < C.n(); ++a2)
            for (int a3 = 0; a3 < C.n(); ++a3) {
                if (!two_point_index(C, a2, a3).size()) continue;
                CAPTURE(nm);
                CAPTURE(a2);
                CAPTURE(a3);
                CHECK(dist(beta_matrix(C, a2, a3),
                           beta_matrix_diagram(C, a2, a3)) < 1e-9);
            }
    }
}

TEST_CASE("alpha spectrum is unimodular on the golden pair") {
    CategoryData fib = make_fibonacci();
    Mat A = alpha_matrix(fib, 1, 1);
    REQUIRE(A.rows() == 3);
    Eigen::ComplexEigenSolver<Mat> es(A, false);
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(std::abs(es.eigenvalues()(k)) - 1.0) < 1e-9);
}

TEST_CASE("beta is invertible with unit determinant modulus") {
    for (const std::string& nm : builtin_names()) {
        CategoryData C = builtin_by_name(nm);
        for (int a2 = 0; a2 < C.n(); ++a2)
            for (int a3 = 0; a3 < C.n(); ++a3) {
                if (!two_point_index(C, a2, a3).size()) continue;
                CAPTURE(nm);
                CAPTURE(a2);
                CAPTURE(a3);
                Mat B = beta_matrix(C, a2, a3);
                CHECK(std::abs(std::abs(B.determinant()) - 1.0) < 1e-9);
            }
    }
}

TEST_CASE("modular map intertwines the two translations") {
    CategoryData fib = make_fibonacci();
    {
        Mat A = alpha_matrix(fib, 1, 1);
        Mat B = beta_matrix(fib, 1, 1);
        Mat S = s_two_point(fib, 1, 1);
        CHECK(dist(S * A, B * S) < 1e-8);
    }
    CategoryData ising = make_ising();
    double worst = 0.0;
    for (int a2 = 0; a2 < 3; ++a2)
        for (int a3 = 0; a3 < 3; ++a3) {
            Mat A = alpha_matrix(ising, a2, a3);
            Mat B = beta_matrix(ising, a2, a3);
            Mat S = s_two_point(ising, a2, a3);
            if (!S.rows()) continue;
            worst = std::max(worst, dist(S * A, B * S));
        }
    CHECK(worst < 1e-8);
}

TEST_CASE("intertwining report passes on every builtin and pair") {
    for (const std::string& nm : builtin_names()) {
        CategoryData C = builtin_by_name(nm);
        for (int a2 = 0; a2 < C.n(); ++a2)
            for (int a3 = 0; a3 < C.n(); ++a3) {
                CheckReport rep = check_s_alpha_beta(C, a2, a3);
                for (const auto& c : rep.checks) {
                    CAPTURE(nm);
                    CAPTURE(a2);
                    CAPTURE(a3);
                    CAPTURE(c.name);
                    CHECK(c.pass);
                }
            }
    }
}
