#include "mtc/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace mtc {

CheckResult& CheckReport::add(std::string name, double residual, double tol,
                              std::string witness, double ms) {
    CheckResult r;
    r.name = std::move(name);
    r.residual = residual;
    r.tol = tol;
    r.pass = std::isfinite(residual) && residual < tol;
    r.witness = std::move(witness);
    r.ms = ms;
    checks.push_back(std::move(r));
    return checks.back();
}

void CheckReport::merge(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool CheckReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

double CheckReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

const CheckResult* CheckReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string render_report_json(const CheckReport& r, const std::string& subject) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json j;
        j["check"] = c.name;
        j["residual"] = c.residual;
        j["tol"] = c.tol;
        j["pass"] = c.pass;
        j["witness"] = c.witness.empty() ? nlohmann::json::array()
                                         : nlohmann::json::array({c.witness});
        j["ms"] = c.ms;
        checks.push_back(std::move(j));
    }
    nlohmann::json out;
    out["report_version"] = 1;
    out["subject"] = subject;
    out["checks"] = std::move(checks);
    return out.dump(2);
}

std::string render_report_text(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name;
        for (size_t i = c.name.size(); i < 36; ++i) os << ' ';
        os << " residual=" << c.residual << " tol=" << c.tol;
        if (!c.witness.empty()) os << "  [" << c.witness << "]";
        os << "\n";
    }
    return os.str();
}

Stopwatch::Stopwatch()
    : t0_(std::chrono::duration_cast<std::chrono::microseconds>(
              std::chrono::steady_clock::now().time_since_epoch())
              .count()) {}

double Stopwatch::elapsed_ms() const {
    long long t1 = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count();
    return double(t1 - t0_) / 1000.0;
}

}  // namespace mtc
