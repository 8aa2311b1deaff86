// Check reports: the result currency of every verification suite.

#ifndef CUBECALC_REPORT_HPP
#define CUBECALC_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace cubecalc {

struct DegreeRow {
    int degree = 0;
    std::string lhs, rhs;
    bool ok = true;
};

struct CheckReport {
    std::string name;
    bool passed = true;
    std::string mode = "strict";  // strict | homology
    std::vector<DegreeRow> table;
    std::string witness;  // simplex or degree description on failure
    std::string repro;    // expression reproducing the check

    void fail(const std::string& w) {
        passed = false;
        if (witness.empty()) witness = w;
    }
    void row(int degree, std::string lhs, std::string rhs) {
        bool ok = lhs == rhs;
        table.push_back({degree, std::move(lhs), std::move(rhs), ok});
        if (!ok) fail("degree " + std::to_string(degree));
    }

    std::string text() const {
        std::string s = (passed ? "[pass] " : "[FAIL] ") + name + " (mode=" + mode + ")";
        if (!passed) s += "  witness: " + witness;
        if (!repro.empty()) s += "\n  repro: " + repro;
        for (const auto& r : table)
            s += "\n  degree " + std::to_string(r.degree) + ": " + r.lhs +
                 (r.ok ? " == " : " != ") + r.rhs;
        return s;
    }
    nlohmann::json json() const {
        nlohmann::json j;
        j["name"] = name;
        j["passed"] = passed;
        j["mode"] = mode;
        j["witness"] = witness;
        if (!repro.empty()) j["repro"] = repro;
        j["table"] = nlohmann::json::array();
        for (const auto& r : table)
            j["table"].push_back({{"degree", r.degree}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"ok", r.ok}});
        return j;
    }
};

}  // namespace cubecalc

#endif
