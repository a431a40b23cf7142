#pragma once

#include <string>
#include <vector>

namespace mz::acceptance {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

using CheckFn = CheckResult (*)();

struct CheckEntry {
    int id;
    const char* name;
    double budget_seconds;
    CheckFn fn;
};

// The eleven acceptance criteria (ids 1..11).
const std::vector<CheckEntry>& registry();
// Per-module invariants and properties (ids from 101, printed as I01...).
const std::vector<CheckEntry>& property_registry();

// Runs one check with timing; exceptions count as failures.
CheckResult run_check(const CheckEntry& e);

// One "PASS|FAIL  id  name  (time) detail" line.
std::string format_line(const CheckResult& r);

}  // namespace mz::acceptance
