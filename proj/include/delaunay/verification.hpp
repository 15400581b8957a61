#pragma once

// The acceptance suite: each criterion compares the library against an
// independent oracle and reports its worst observed error against a pinned
// tolerance.

#include <string>
#include <vector>

#include <json.hpp>

namespace delaunay::verification {

enum class Level { fast, full };

struct CheckResult {
    int criterion;
    std::string name;
    bool passed;
    double observed;   // worst error or smallest margin, see detail
    double tolerance;
    std::string detail;
    double seconds;
};

struct Report {
    Level level;
    std::vector<CheckResult> checks;
    double seconds;
    int failures() const;
};

Report runAcceptance(Level level);

/// One line per check: "PASS|FAIL [n] name: detail".
std::string formatLine(const CheckResult& r);
nlohmann::ordered_json toJson(const Report& r);

}  // namespace delaunay::verification
