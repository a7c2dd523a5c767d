#ifndef MTC_REPORT_HPP
#define MTC_REPORT_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace mtc {

struct Check {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string detail; // witness for failures, empty otherwise
};

/// A list of named pass/fail checks with worst-case residuals. Axiom
/// violations are reported here, never thrown.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool pass, double residual = 0.0, std::string detail = {}) {
        checks.push_back({std::move(name), pass, residual, std::move(detail)});
    }

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const Check& c) { return c.pass; });
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    double worst_residual() const {
        double worst = 0.0;
        for (const auto& c : checks)
            worst = std::max(worst, c.residual);
        return worst;
    }

    std::string summary() const {
        std::ostringstream out;
        for (const auto& c : checks) {
            out << (c.pass ? "pass" : "FAIL") << "  " << c.name
                << "  residual=" << c.residual;
            if (!c.detail.empty())
                out << "  (" << c.detail << ")";
            out << '\n';
        }
        return out.str();
    }
};

} // namespace mtc

#endif
