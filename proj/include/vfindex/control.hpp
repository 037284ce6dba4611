#pragma once

#include <ostream>
#include <string>

#include "errors.hpp"

namespace vfindex {

/// Shared knobs for long-running basis computations: an S-pair budget
/// (exceeded -> BudgetExceededError) and an optional trace sink for
/// S-pair statistics. One instance per top-level computation; the engine
/// only increments counters, so passing nullptr disables both features.
struct ComputeControl {
    long max_spairs = -1; // -1 = unlimited
    long spairs_processed = 0;
    long spairs_skipped = 0;
    std::ostream* trace_out = nullptr;

    void count_spair() {
        ++spairs_processed;
        if (max_spairs >= 0 && spairs_processed > max_spairs)
            throw BudgetExceededError("S-pair budget exceeded (--max-spairs " +
                                      std::to_string(max_spairs) + ")");
    }

    void trace(const std::string& line) {
        if (trace_out) (*trace_out) << line << "\n";
    }
};

} // namespace vfindex
