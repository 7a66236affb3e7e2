#pragma once

// Exact integer arithmetic on top of GMP: factorization, divisor machinery,
// multiplicative statistics, relative gcd decompositions and the two
// standalone identities (Lebesgue lcm, spaced binomial sums).

#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "unitfrac/smallint.hpp"

namespace unitfrac {

struct PrimePower {
    mpz_class prime;
    unsigned exponent;
};

// Primes strictly increasing, exponents >= 1, product == value.
// value == 1 iff factors is empty.
struct Factorization {
    std::vector<PrimePower> factors;
    mpz_class value;
};

// Unique prime factorization of n >= 1. Small-prime trial division up to
// 1e4, then probabilistic primality testing plus randomized splitting for
// the cofactor. Output is deterministic for a given n.
Factorization factorize(const mpz_class& n);

// All tau(n) divisors, ascending.
std::vector<mpz_class> divisors(const Factorization& f);

struct MultiplicativeStats {
    u64 tau = 0;
    u64 omega = 0;
    mpz_class totient;
    std::optional<u64> tau_in_class;
    std::optional<u64> omega_in_class;
};

// tau / omega / phi, plus divisor and prime counts in the residue class
// r mod q when a residue is supplied (requires gcd(r, q) = 1).
MultiplicativeStats multiplicative_stats(
    const Factorization& f,
    std::optional<std::pair<mpz_class, mpz_class>> residue = std::nullopt);

// Relative greatest common divisors of a tuple (t_1..t_k), k <= 16.
// Subsets are encoded as bitmasks: bit i-1 set <=> element i in J.
// Invariants: t_i = prod over J containing i of x_J, and gcd(x_J, x_K) = 1
// whenever J and K are incomparable.
struct RgcdDecomposition {
    unsigned k = 0;
    std::vector<mpz_class> entries;  // index = bitmask, entries[0] unused (1)

    const mpz_class& x(unsigned mask) const { return entries[mask]; }
    mpz_class reconstruct(unsigned i) const;  // t_i from the entries, i in 1..k
};

RgcdDecomposition rgcd_decompose(const std::vector<mpz_class>& t);

// Lebesgue's identity: lcm(t_1..t_k) as a quotient of products of subset
// gcds (odd-size subsets over even-size subsets).
mpz_class lcm_lebesgue(const std::vector<mpz_class>& t);

// Sum of C(n, i*u) over i >= 0, by direct binomial summation.
mpz_class spaced_binomial_sum(unsigned long n, unsigned long u);

// Multiplicative order of a modulo q; requires gcd(a, q) = 1, q >= 1.
mpz_class order_mod(const mpz_class& a, const mpz_class& q);

}  // namespace unitfrac
