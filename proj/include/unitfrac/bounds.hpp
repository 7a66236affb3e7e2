#pragma once

// Numeric evaluators for the closed-form bound shapes, for reporting only.
// Epsilon is fixed to 0 everywhere and every value is labeled; no bound is
// ever asserted against measured counts.

#include <string>
#include <vector>

#include <gmpxx.h>

namespace unitfrac {

struct BoundEntry {
    std::string tag;  // formula label, eps fixed to 0
    long double value;
};

struct BoundReport {
    mpz_class m, n;
    unsigned k = 3;
    std::vector<BoundEntry> entries;
};

// All applicable bound shapes for (m, n, k), 3 <= k <= 12.
BoundReport evaluate_bounds(const mpz_class& m, const mpz_class& n, unsigned k);

// Theta_{k+1} = Theta_k / 2 + 2/3, exact rationals from Theta_5 = seed
// (default 4/3, the fixed point) up to Theta_{k_max}.
std::vector<mpq_class> theta_sequence(unsigned k_max, const mpq_class& seed = mpq_class(4, 3));

struct LowerBoundProfiles {
    long double log_ratio;        // log n / log log n
    long double composite_coeff;  // log 6
    long double composite_value;  // exp(log 6 * ratio)
    long double prime_coeff;      // 5 log 2 / (12 lcm(m, f))
    long double prime_value;      // exp(coeff * ratio)
};

// Requires n >= 3 (log log must be positive).
LowerBoundProfiles lower_bound_profiles(const mpz_class& n, const mpz_class& m,
                                        const mpz_class& f);

}  // namespace unitfrac
