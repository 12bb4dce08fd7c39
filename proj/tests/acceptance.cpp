#include "orex/selfcheck.hpp"

#include <cstdlib>
#include <iostream>

// Runs every acceptance criterion once and prints one line per criterion.
// Exit code 0 only when all of them pass. An optional argument overrides the
// randomness seed.
int main(int argc, char** argv) {
    unsigned long seed = 20260817;
    if (argc > 1) seed = std::strtoul(argv[1], nullptr, 10);

    const std::vector<orex::CheckResult> results = orex::run_acceptance_suite(seed);
    bool ok = true;
    for (const orex::CheckResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": "
                  << r.detail << "\n";
        ok = ok && r.passed;
    }
    std::cout << (ok ? "acceptance: all criteria satisfied"
                     : "acceptance: FAILURES present")
              << " (seed " << seed << ")\n";
    return ok ? 0 : 1;
}
