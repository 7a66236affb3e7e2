#pragma once

// Solution patterns for the three-fraction equation: divisor triples
// (n1, n2, n3) of n with the derived constants d_ij = gcd(n/n_i, n/n_j),
// the exact rational C = 36 / (n1^2 * d23) and the branch bound
// B = floor((C * n^3 / m^2)^(1/5)).

#include <array>
#include <vector>

#include <gmpxx.h>

#include "unitfrac/smallint.hpp"

namespace unitfrac {

struct Pattern3 {
    u64 n1 = 1, n2 = 1, n3 = 1;
    u64 d12 = 1, d13 = 1, d23 = 1;
    mpz_class c_num, c_den;  // C reduced to lowest terms
    u64 bound = 0;           // B, exact integer fifth root
};

// All tau(n)^3 ordered divisor triples, lexicographic.
std::vector<std::array<u64, 3>> enumerate_patterns(const std::vector<Factor64>& n_fact);

// Fill the derived constants for one triple; each n_i must divide n.
Pattern3 derive_constants(u64 m, u64 n, const std::array<u64, 3>& triple);

}  // namespace unitfrac
