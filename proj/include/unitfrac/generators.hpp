#pragma once

// Constructive solution families: composite denominators built from
// primorials, shifted-divisor families for arbitrary fractions, and the
// prime families with pattern (1, p, p). Every emitted triple is verified
// by exact rational arithmetic before it is returned.

#include <set>
#include <stdexcept>
#include <vector>

#include "unitfrac/fraction.hpp"

namespace unitfrac {

struct CompositeFamilySpec {
    unsigned r = 0;       // number of primes in the primorial
    mpz_class m;          // multiplier
    mpz_class n_prime;    // product of the first r primes
    mpz_class n;          // m * n_prime
};

// Rejects r > 12 (desk scale), m < 1.
CompositeFamilySpec make_composite_spec(unsigned r, const mpz_class& m);

struct CompositeResult {
    CompositeFamilySpec spec;
    std::set<Solution> solutions;    // verified, distinct triples for m/n
    mpz_class certified_bound;       // ceil(2^r * 3^r / 2)
};

CompositeResult gen_composite(const CompositeFamilySpec& spec);

// For every divisor d of n' (the reduced denominator) with n' + d = 0
// (mod m'), take a1 = (n'+d)/m' and split the exact residual over all
// unordered coprime divisor pairs of n'.
std::set<Solution> gen_shifted_divisor(const Fraction& f);

struct PrimeFamilySpec {
    mpz_class m, e, f;
    mpz_class k;                  // (f-e) + j*f, smallest valid shift
    mpz_class big_m;              // lcm(m, f)
    std::vector<mpz_class> q_list;
    mpz_class big_q;              // product of q_list
    mpz_class p;                  // prime = -k (mod Q*M), p = e (mod f)
    mpz_class ord;                // ord_k(-M/m)
};

struct PrimeFamilyResult {
    PrimeFamilySpec spec;
    std::set<Solution> solutions;  // verified triples for m/p
};

struct SearchExhausted : std::runtime_error {
    mpz_class limit;
    explicit SearchExhausted(mpz_class lim)
        : std::runtime_error("prime search exhausted below the limit; raise search_limit"),
          limit(std::move(lim)) {}
};

// search_limit <= 0 selects the default (Q*M)^3. Throws SearchExhausted
// when no prime turns up below the limit.
PrimeFamilyResult gen_prime_family(const mpz_class& m, const mpz_class& e, const mpz_class& f,
                                   unsigned r, const mpz_class& search_limit = 0);

// Number of admissible prime subsets: sum over i >= 0 of C(r, i*ord + 1).
mpz_class admissible_subset_count(unsigned r, const mpz_class& ord);

}  // namespace unitfrac
