#pragma once

#include <string>
#include <vector>

namespace mtc {

// Outcome of one verification. pass is defined as residual < tol.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string witness;  // worst-case index tuple, human readable
    double ms = 0.0;      // wall time
};

struct CheckReport {
    std::vector<CheckResult> checks;

    CheckResult& add(std::string name, double residual, double tol,
                     std::string witness = std::string(), double ms = 0.0);
    void merge(const CheckReport& other);

    bool all_pass() const;
    double max_residual() const;
    const CheckResult* find(const std::string& name) const;
};

// Array-of-checks serialization; "report_version": 1 wrapper with the
// category name is added by render_report_json.
std::string render_report_json(const CheckReport& r, const std::string& subject);
std::string render_report_text(const CheckReport& r);

// Scope timer: on destruction stores elapsed milliseconds into the target.
class Stopwatch {
public:
    Stopwatch();
    double elapsed_ms() const;

private:
    long long t0_;
};

}  // namespace mtc
