#include <complex>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mtc/builtin.hpp"
#include "mtc/category.hpp"
#include "mtc/doubled.hpp"
#include "mtc/modular.hpp"
#include "mtc/report.hpp"
#include "mtc/sl2z.hpp"

namespace {

struct Common {
    std::string category_path;
    std::string builtin_name;
    double tol = 1e-9;
    bool json = false;
    int threads = 1;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--category", c.category_path, "category data file");
    sub->add_option("--builtin", c.builtin_name,
                    "built-in category (trivial, fibonacci, ising, z3)");
    sub->add_option("--tol", c.tol, "check tolerance")->capture_default_str();
    sub->add_flag("--json", c.json, "machine readable report");
    sub->add_option("--threads", c.threads, "worker threads")
        ->capture_default_str();
}

mtc::CategoryData resolve_category(const Common& c) {
    if (!c.category_path.empty() && !c.builtin_name.empty())
        throw mtc::CategoryError(mtc::CategoryError::Kind::Schema,
                                 "give either --category or --builtin");
    if (!c.category_path.empty()) return mtc::load_category(c.category_path);
    if (!c.builtin_name.empty()) return mtc::builtin_by_name(c.builtin_name);
    throw mtc::CategoryError(mtc::CategoryError::Kind::Schema,
                             "one of --category or --builtin is required");
}

int emit_report(const mtc::CheckReport& rep, const Common& c,
                const std::string& subject) {
    if (c.json)
        std::cout << mtc::render_report_json(rep, subject) << "\n";
    else
        std::cout << mtc::render_report_text(rep);
    return rep.all_pass() ? 0 : 1;
}

int cmd_validate(const Common& c) {
    mtc::CategoryData cat = resolve_category(c);
    mtc::CheckReport rep = mtc::validate_category(cat, c.tol, c.threads);
    return emit_report(rep, c, cat.name);
}

int cmd_info(const Common& c, bool show_double) {
    mtc::CategoryData cat = resolve_category(c);
    if (show_double) cat = mtc::build_double(cat).cat;
    std::cout << "name: " << cat.name << "\n";
    std::cout << "labels: " << cat.n() << "\n";
    for (int a = 0; a < cat.n(); ++a) {
        std::cout << "  " << cat.label(a) << "  dual=" << cat.label(cat.dual[a])
                  << "  dim=" << cat.dims[a] << "  twist=("
                  << cat.twists[a].real() << "," << cat.twists[a].imag()
                  << ")  fs=" << cat.fs[a] << "\n";
    }
    std::cout << "fusion:\n";
    for (int a = 0; a < cat.n(); ++a)
        for (int b = 0; b < cat.n(); ++b)
            for (int x = 0; x < cat.n(); ++x)
                if (cat.N(a, b, x)) {
                    std::cout << "  " << cat.label(a) << " x " << cat.label(b)
                              << " -> " << cat.label(x);
                    if (cat.N(a, b, x) > 1)
                        std::cout << "  (mult " << cat.N(a, b, x) << ")";
                    std::cout << "\n";
                }
    std::complex<double> D = cat.Dscalar();
    std::cout << "cmod8: " << cat.cmod8 << "\n";
    std::cout << "total dim D: (" << D.real() << "," << D.imag() << ")\n";
    mtc::MirrorCharge mc = mtc::mirror_charge_hint(cat);
    if (mc.degenerate)
        std::cout << "charge hint: degenerate (" << mc.note << ")\n";
    else
        std::cout << "charge hint: " << mc.value << "\n";
    return 0;
}

nlohmann::json complex_pair(mtc::cplx z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

int cmd_smatrix(const Common& c) {
    mtc::CategoryData cat = resolve_category(c);
    mtc::ModularData md = mtc::modular_data(cat);
    nlohmann::json j;
    j["labels"] = md.labels;
    j["D"] = complex_pair(md.D);
    j["See"] = complex_pair(md.See);
    nlohmann::json blocks = nlohmann::json::object();
    for (int a = 0; a < cat.n(); ++a) {
        const mtc::Mat& S = md.Smat[a];
        if (!S.rows()) continue;
        nlohmann::json m = nlohmann::json::array();
        for (int r = 0; r < S.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < S.cols(); ++k) row.push_back(complex_pair(S(r, k)));
            m.push_back(row);
        }
        blocks[cat.label(a)] = m;
    }
    j["blocks"] = blocks;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_relations(const Common& c) {
    mtc::CategoryData cat = resolve_category(c);
    mtc::CheckReport rep = mtc::check_modular_relations(cat, c.tol);
    return emit_report(rep, c, cat.name);
}

int cmd_sl2z(const Common& c) {
    mtc::CategoryData cat = resolve_category(c);
    mtc::CheckReport all;
    for (int a2 = 0; a2 < cat.n(); ++a2)
        for (int a3 = 0; a3 < cat.n(); ++a3) {
            mtc::CheckReport rep = mtc::check_s_alpha_beta(cat, a2, a3, c.tol);
            for (auto& check : rep.checks)
                check.name = "[" + cat.label(a2) + "," + cat.label(a3) + "] " +
                             check.name;
            all.merge(rep);
        }
    return emit_report(all, c, cat.name);
}

int not_built(const std::string& name) {
    std::cerr << name << ": not built yet\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computations in skeletal braided fusion categories"};
    app.require_subcommand(1);

    Common c;
    bool info_double = false;
    std::string file_arg;
    std::string expr_arg;
    std::string brane_spec;

    CLI::App* validate = app.add_subcommand("validate", "check category data");
    add_common(validate, c);
    CLI::App* info = app.add_subcommand("info", "describe a category");
    add_common(info, c);
    info->add_flag("--double", info_double, "describe the doubled category");
    CLI::App* smatrix = app.add_subcommand("smatrix", "print the S matrix");
    add_common(smatrix, c);
    CLI::App* relations =
        app.add_subcommand("check-relations", "modular group relations");
    add_common(relations, c);
    CLI::App* frobenius =
        app.add_subcommand("check-frobenius", "algebra axioms for FILE");
    add_common(frobenius, c);
    frobenius->add_option("file", file_arg, "algebra data file")->required();
    CLI::App* modinv = app.add_subcommand("check-modular-invariance",
                                          "torus invariance for FILE");
    add_common(modinv, c);
    modinv->add_option("file", file_arg, "algebra data file")->required();
    CLI::App* buildcardy =
        app.add_subcommand("build-cardy", "emit the standard open-closed pair");
    add_common(buildcardy, c);
    buildcardy->add_option("--brane", brane_spec,
                           "object spec, e.g. 'sigma' or '1+tau'");
    CLI::App* checkcardy =
        app.add_subcommand("check-cardy", "boundary consistency for FILE");
    add_common(checkcardy, c);
    checkcardy->add_option("file", file_arg, "open-closed data file")
        ->required();
    CLI::App* sl2z =
        app.add_subcommand("check-sl2z", "torus coordinate changes");
    add_common(sl2z, c);
    CLI::App* eval = app.add_subcommand("eval", "evaluate a diagram EXPR");
    add_common(eval, c);
    eval->add_option("expr", expr_arg, "diagram expression")->required();
    CLI::App* runall = app.add_subcommand("run-all", "every check in one go");
    add_common(runall, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(c);
        if (info->parsed()) return cmd_info(c, info_double);
        if (smatrix->parsed()) return cmd_smatrix(c);
        if (relations->parsed()) return cmd_relations(c);
        if (frobenius->parsed()) return not_built("check-frobenius");
        if (modinv->parsed()) return not_built("check-modular-invariance");
        if (buildcardy->parsed()) return not_built("build-cardy");
        if (checkcardy->parsed()) return not_built("check-cardy");
        if (sl2z->parsed()) return cmd_sl2z(c);
        if (eval->parsed()) return not_built("eval");
        if (runall->parsed()) return not_built("run-all");
    } catch (const mtc::CategoryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
