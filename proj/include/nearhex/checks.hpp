#pragma once

#include <string>
#include <vector>

#include "nearhex/tables.hpp"

namespace nearhex {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
};

struct CheckOptions {
    bool quick = false;  // skip the hexagon Veldkamp build and automorphism counts
    int threads = 1;
    tables::ExpectedTables expected = tables::builtin_tables();
};

// Runs the full named check battery in a fixed order; every result carries
// the expected-versus-computed detail on failure.
std::vector<CheckResult> run_checks(const CheckOptions& opt);

// True when every non-skipped check passed.
bool checks_passed(const std::vector<CheckResult>& results);

}  // namespace nearhex
