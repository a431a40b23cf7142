#pragma once

#include <sstream>
#include <string>

#include "checks.hpp"

namespace mz::acceptance {

// Counts cases and keeps the first failure for the report line.
struct Tally {
    long checked = 0;
    long failed = 0;
    std::string first_failure;
    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first_failure = what;
    }
    CheckResult finish() const {
        CheckResult r;
        r.pass = failed == 0 && checked > 0;
        std::ostringstream os;
        os << checked - failed << "/" << checked << " cases";
        if (failed) os << "; first failure: " << first_failure;
        r.detail = os.str();
        return r;
    }
};

}  // namespace mz::acceptance
