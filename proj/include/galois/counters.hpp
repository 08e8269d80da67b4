#pragma once

#include <cstdint>

namespace galois {

// Deterministic work counters. Reports include these instead of wall-clock
// times so identical inputs produce byte-identical output; wall-clock
// timing, when wanted, goes to stderr.
struct WorkCounters {
    std::uint64_t tuples_tested = 0;
    std::uint64_t reconstructions = 0;
    std::uint64_t exact_checks = 0;
    long max_precision_bits = 0;

    void note_precision(long bits) {
        if (bits > max_precision_bits) max_precision_bits = bits;
    }
};

WorkCounters& work_counters();
void reset_work_counters();

}  // namespace galois
