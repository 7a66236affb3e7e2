#pragma once

// Representations as sums of k >= 4 unit fractions by recursion: fix
// a_1..a_{k-3} over the exact residual ranges, then solve the remaining
// three-fraction problem.

#include <optional>
#include <set>

#include "unitfrac/fraction.hpp"

namespace unitfrac {

// alpha_1 = k, alpha_i = (k-i+1) * prod_{j<i} alpha_j. Any sorted solution
// satisfies a_i <= alpha_i * n^(2^(i-1)).
struct AlphaBounds {
    unsigned k = 0;
    std::vector<mpz_class> alphas;
};
AlphaBounds alpha_bounds(unsigned k);

inline constexpr unsigned kDefaultMaxK = 9;

// Complete duplicate-free set of sorted k-tuples. Arities above k_cap are
// rejected (the state space is doubly exponential in k).
std::set<Solution> enumerate_k(const Fraction& f, unsigned k, unsigned k_cap = kDefaultMaxK);

// Early-exit existence variant, denominators chosen in ascending order.
std::optional<Solution> first_solution_k(const Fraction& f, unsigned k,
                                         unsigned k_cap = kDefaultMaxK);

}  // namespace unitfrac
