#pragma once

#include <map>
#include <string>
#include <vector>

namespace kakeya {

// One inequality or identity verdict: lhs vs rhs with the slack that was allowed.
struct CheckReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool pass = true;
};

// Aggregate emitted by verification runs: measured quantities plus check verdicts.
struct ConstructionReport {
    std::string name;
    std::map<std::string, double> measured;
    std::vector<CheckReport> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add_check(std::string check_name, double lhs, double rhs, double slack) {
        checks.push_back({std::move(check_name), lhs, rhs, slack, lhs <= rhs + slack});
    }
};

// Verdict of a sampled bound verification.
struct BoundReport {
    double max_violation = 0.0;
    long samples_checked = 0;
    bool pass = true;
};

} // namespace kakeya
