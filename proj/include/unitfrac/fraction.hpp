#pragma once

#include <vector>

#include <gmpxx.h>

namespace unitfrac {

// A positive rational m/n. Reduction never changes the set of unit-fraction
// representations, so the solvers reduce on entry.
struct Fraction {
    mpz_class num;
    mpz_class den;
    bool reduced = false;

    Fraction(mpz_class m, mpz_class n);
    Fraction(unsigned long m, unsigned long n) : Fraction(mpz_class(m), mpz_class(n)) {}

    Fraction reduce() const;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Sorted tuple a_1 <= ... <= a_k of positive denominators.
using Solution = std::vector<mpz_class>;

// Exact check that 1/a_1 + ... + 1/a_k == f.
bool exact_unit_sum(const Solution& s, const Fraction& f);

}  // namespace unitfrac
