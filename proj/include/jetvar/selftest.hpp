#pragma once

#include <cstdint>
#include <ostream>

namespace jetvar {

struct SelftestOptions {
    std::uint64_t seed = 42;
    int cases = 50;     // per suite
    int max_order = 3;  // cap on generated jet orders
};

/// Runs the randomized property suites and prints one PASS/FAIL line per
/// suite plus a summary. Output is byte-deterministic for a fixed seed.
/// Returns true when every suite passes.
bool run_selftest(const SelftestOptions& opts, std::ostream& out);

}  // namespace jetvar
