#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tpo::cli {

struct CheckItem {
    std::string name;
    bool pass = false;
    double value = 0.0;     // measured deviation
    double tolerance = 0.0; // allowed deviation
    std::string detail;
};

/// Built-in cross-validation suite: Wigner normalizations, quadrature
/// identities, equilibrium moment identities, special-function identities,
/// and a short seeded ensemble. Output is deterministic.
std::vector<CheckItem> run_check_suite(unsigned threads = 1);

/// One line per item: "PASS|FAIL name deviation=... tolerance=...".
void print_check(std::ostream& os, const std::vector<CheckItem>& items);

bool all_passed(const std::vector<CheckItem>& items);

} // namespace tpo::cli
