#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jetvar/jetspace.hpp"

namespace jetvar {

/// One batch command for the engine, fully resolved (format defaults and
/// environment already applied).
struct JobSpec {
    JetSpaceConfig cfg;
    std::string command;              // el, hlm, tonti, d, dbar, h, v, project,
                                      // adjoint, green, homotopy, selftest
    std::vector<std::string> inputs;  // expressions (DSL, or JSON when starting with '{')
    std::string format = "text";      // text | latex | json
    std::uint64_t seed = 42;          // selftest
    int cases = 50;                   // selftest, per suite
    int max_order = 3;                // selftest, cap on generated jet orders
    int contact = 0, horizontal = 0;  // project
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 parse/usage, 2 math domain
    std::string output;
    std::string error;
};

/// Dispatches a job; never throws. Output is deterministic: identical
/// JobSpec (including seed) gives byte-identical output.
RunResult run_job(const JobSpec& job);

}  // namespace jetvar
