#pragma once

// Byte-stable output records for the CLI: one JSON object per line with
// keys {m, n, k, denominators}, or CSV with columns m,n,k,a1..ak.

#include <string>

#include "unitfrac/fraction.hpp"

namespace unitfrac {

struct SolutionRecord {
    mpz_class m, n;
    unsigned k = 0;
    Solution denominators;
};

std::string jsonl_line(const SolutionRecord& rec);
std::string csv_header(unsigned k);
std::string csv_line(const SolutionRecord& rec);

}  // namespace unitfrac
