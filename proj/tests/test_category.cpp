#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mtc/builtin.hpp"
#include "mtc/category.hpp"
#include "mtc/report.hpp"

using mtc::cplx;
using mtc::Mat;

namespace {

double cdiff(cplx a, cplx b) { return std::abs(a - b); }

// Monodromy-trace matrix, computed from fusion and twists alone. Used as an
// independent cross-check for the modular data; never used by the library.
Mat monodromy_trace_matrix(const mtc::CategoryData& cat) {
    int n = cat.n();
    Mat s = Mat::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            cplx v = 0.0;
            for (int c = 0; c < n; ++c)
                v += double(cat.N(a, b, c)) * cat.dims[c] * cat.twists[c] /
                     (cat.twists[a] * cat.twists[b]);
            s(a, b) = v;
        }
    return s;
}

std::string minimal_category_json(const std::string& patch_field,
                                  const std::string& patch_value) {
    // One-label category with a single field overridden.
    std::ostringstream os;
    auto field = [&](const std::string& name, const std::string& def) {
        os << "\"" << name
           << "\": " << (patch_field == name ? patch_value : def);
    };
    os << "{";
    field("name", "\"t\"");
    os << ",";
    field("labels", "[\"e\"]");
    os << ",";
    field("unit", "\"e\"");
    os << ",";
    field("dual", "{\"e\":\"e\"}");
    os << ",";
    field("fusion", "[[\"e\",\"e\",\"e\",1]]");
    os << ",";
    field("dims", "{\"e\":1.0}");
    os << ",";
    field("twists", "{\"e\":[1.0,0.0]}");
    os << ",";
    field("fs", "{\"e\":1}");
    os << ",";
    field("cmod8", "0.0");
    os << "}";
    return os.str();
}

}  // namespace

TEST_CASE("built-in categories satisfy every axiom") {
    for (const auto& name : mtc::builtin_names()) {
        CAPTURE(name);
        mtc::CategoryData cat = mtc::builtin_by_name(name);
        mtc::CheckReport rep = mtc::validate_category(cat, 1e-9, 2);
        for (const auto& chk : rep.checks) {
            CAPTURE(chk.name);
            CAPTURE(chk.witness);
            CHECK(chk.residual < 1e-9);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("quantum dimensions match the fusion spectral radius") {
    const double golden = 1.6180339887498949;
    CHECK(mtc::make_fibonacci().dims[1] == doctest::Approx(golden).epsilon(1e-12));
    CHECK(mtc::make_ising().dims[2] ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("charge hints recover the stored value mod 8") {
    auto hint = [](const char* name) {
        return mtc::mirror_charge_hint(mtc::builtin_by_name(name)).value;
    };
    CHECK(hint("trivial") == doctest::Approx(0.0));
    CHECK(hint("fibonacci") == doctest::Approx(-2.8));
    CHECK(hint("ising") == doctest::Approx(-0.5));
    CHECK(hint("z3") == doctest::Approx(-2.0));
    for (const auto& name : mtc::builtin_names()) {
        mtc::CategoryData cat = mtc::builtin_by_name(name);
        mtc::MirrorCharge mc = mtc::mirror_charge_hint(cat);
        CHECK(!mc.degenerate);
        double diff = std::remainder(mc.value - cat.cmod8, 8.0);
        CHECK(std::abs(diff) < 1e-9);
    }
}

TEST_CASE("monodromy trace matrix is modular for every built-in") {
    for (const auto& name : mtc::builtin_names()) {
        CAPTURE(name);
        mtc::CategoryData cat = mtc::builtin_by_name(name);
        Mat st = monodromy_trace_matrix(cat);
        Mat S = st / cat.Dscalar();
        Mat uni = S * S.adjoint();
        CHECK((uni - Mat::Identity(cat.n(), cat.n())).cwiseAbs().maxCoeff() <
              1e-9);
        CHECK((S - S.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        for (int a = 0; a < cat.n(); ++a)
            CHECK(cdiff(st(cat.unit, a), cplx(cat.dims[a])) < 1e-12);
    }
}

TEST_CASE("monodromy trace values on the golden and square-root categories") {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    mtc::CategoryData fib = mtc::make_fibonacci();
    Mat st = monodromy_trace_matrix(fib);
    CHECK(cdiff(st(1, 1), cplx(-1.0)) < 1e-12);
    CHECK(cdiff(fib.Dscalar(), cplx(std::sqrt(2.0 + phi))) < 1e-12);

    mtc::CategoryData is = mtc::make_ising();
    Mat sti = monodromy_trace_matrix(is);
    CHECK(cdiff(is.Dscalar(), cplx(2.0)) < 1e-12);
    Mat want(3, 3);
    double r2 = std::sqrt(2.0);
    want << 1, 1, r2, 1, 1, -r2, r2, -r2, 0;
    CHECK((sti - want).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("a perturbed recoupling table loudly fails the pentagon") {
    mtc::CategoryData cat = mtc::make_fibonacci();
    cat.F[mtc::FKey{1, 1, 1, 1, 0, 0, 0, 0, 0, 0}] += 0.1;
    mtc::CheckReport rep = mtc::validate_category(cat, 1e-9, 2);
    const mtc::CheckResult* pent = rep.find("pentagon");
    REQUIRE(pent != nullptr);
    CHECK(pent->residual > 1e-2);
    CHECK(!pent->pass);
    CHECK(!rep.all_pass());
}

TEST_CASE("loader rejects malformed input with typed errors") {
    using Kind = mtc::CategoryError::Kind;
    auto kind_of = [](const std::string& text) {
        try {
            mtc::parse_category_json(text, "test");
        } catch (const mtc::CategoryError& e) {
            return e.kind;
        }
        throw std::runtime_error("no error raised");
    };
    CHECK(kind_of("this is not json") == Kind::Parse);
    CHECK(kind_of("{\"name\": \"x\"}") == Kind::Schema);
    CHECK(kind_of(minimal_category_json("dual", "{\"e\":\"q\"}")) ==
          Kind::Schema);
    CHECK(kind_of(minimal_category_json("fusion",
                                        "[[\"e\",\"e\",\"q\",1]]")) ==
          Kind::Schema);
    CHECK(kind_of(minimal_category_json("fusion",
                                        "[[\"e\",\"e\",\"e\",-2]]")) ==
          Kind::Value);
    CHECK(kind_of(minimal_category_json("twists", "{\"e\":[0.5,0.0]}")) ==
          Kind::Value);
    CHECK(kind_of(minimal_category_json("dims", "{\"e\":-1.0}")) ==
          Kind::Value);
    // Involution violated on a two-label category.
    std::string two = R"({"name":"t2","labels":["e","a"],"unit":"e",
      "dual":{"e":"e","a":"e"},"fusion":[["e","e","e",1]],
      "dims":{"e":1.0,"a":1.0},"twists":{"e":[1,0],"a":[1,0]},
      "fs":{"e":1,"a":1},"cmod8":0})";
    CHECK(kind_of(two) == Kind::Schema);
    // The minimal category itself parses cleanly.
    mtc::CategoryData ok =
        mtc::parse_category_json(minimal_category_json("", ""), "test");
    CHECK(ok.n() == 1);
}

TEST_CASE("serializer output reloads to the same tables") {
    mtc::CategoryData is = mtc::make_ising();
    mtc::CategoryData back =
        mtc::parse_category_json(mtc::save_category(is), "roundtrip");
    CHECK(back.labels == is.labels);
    CHECK(back.F.size() == is.F.size());
    CHECK(back.R.size() == is.R.size());
    for (const auto& [k, v] : is.F) CHECK(cdiff(back.F.at(k), v) < 1e-14);
    for (const auto& [k, v] : is.R) CHECK(cdiff(back.R.at(k), v) < 1e-14);
    CHECK(cdiff(back.Fv(2, 2, 2, 2, 1, 1), cplx(-1.0 / std::sqrt(2.0))) <
          1e-14);
    CHECK(mtc::validate_category(back, 1e-9, 2).all_pass());
}

TEST_CASE("bundled data files match the built-in tables") {
    for (const auto& name : mtc::builtin_names()) {
        CAPTURE(name);
        std::string path = std::string(MTC_DATA_DIR) + "/" + name + ".json";
        mtc::CategoryData disk = mtc::load_category(path);
        mtc::CategoryData mem = mtc::builtin_by_name(name);
        CHECK(disk.labels == mem.labels);
        CHECK(disk.unit == mem.unit);
        CHECK(disk.dual == mem.dual);
        CHECK(disk.F.size() == mem.F.size());
        for (const auto& [k, v] : mem.F) CHECK(cdiff(disk.F.at(k), v) < 1e-14);
        for (const auto& [k, v] : mem.R) CHECK(cdiff(disk.R.at(k), v) < 1e-14);
        for (int a = 0; a < mem.n(); ++a) {
            CHECK(std::abs(disk.dims[a] - mem.dims[a]) < 1e-14);
            CHECK(cdiff(disk.twists[a], mem.twists[a]) < 1e-14);
        }
    }
}
