#pragma once

// Timing harness: median wall time of enumerate3 and oracle3 per n, with
// fitted log-log slopes. Informational only, no pass/fail.

#include <optional>
#include <string>
#include <vector>

#include "unitfrac/smallint.hpp"

namespace unitfrac {

struct BenchPoint {
    u64 n = 0;
    double enum3_ms = 0.0;
    double oracle_ms = 0.0;
    std::size_t count = 0;  // solutions found (sanity echo)
};

struct BenchReport {
    u64 m = 0;
    int reps = 1;
    std::vector<BenchPoint> points;
    std::optional<double> enum3_slope;   // d log10(t) / d log10(n)
    std::optional<double> oracle_slope;  // absent with fewer than 2 points
    std::string table() const;
};

BenchReport run_bench(u64 m, const std::vector<u64>& ns, int reps);

}  // namespace unitfrac
