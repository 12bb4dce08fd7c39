#pragma once

#include <string>
#include <vector>

namespace orex {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the full invariant suite with deterministic randomness derived from
// the seed: commutation expansions, division, quotient canonical forms, the
// classification table, witness generators, the ideal-lattice check, Lie
// structure data, and normalization replays. Every check uses exact
// arithmetic; a failure message pinpoints the first offending sample.
std::vector<CheckResult> run_acceptance_suite(unsigned long seed);

// True when every entry passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace orex
