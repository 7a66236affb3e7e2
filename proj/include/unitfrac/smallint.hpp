#pragma once

// Native 64/128-bit integer helpers: deterministic primality, Brent-rho
// factorization, divisor generation and integer roots. These back the hot
// search loops; everything that can outgrow machine words lives on the
// GMP side (see arith.hpp).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace unitfrac {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 gcd_u128(u128 a, u128 b);

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 base, u64 exp, u64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(u64 n);

// Primes below `limit` (cached sieves for the limits the library uses).
const std::vector<u32>& small_primes_1e4();

struct Factor64 {
    u64 p;
    unsigned e;
    friend bool operator==(const Factor64&, const Factor64&) = default;
};

// Prime factorization of n >= 1, primes ascending, deterministic.
std::vector<Factor64> factor_u64(u64 n);

// All divisors, ascending.
std::vector<u64> divisors_u64(const std::vector<Factor64>& f);

u64 value_of(const std::vector<Factor64>& f);

// floor(sqrt(n)) and floor(x^(1/5)).
u64 isqrt_u64(u64 n);
u64 ififth_root_u128(u128 x);

// a*b, or nullopt-style failure when the product exceeds 128 bits.
bool mul_check_u128(u128 a, u128 b, u128& out);

std::string to_string_u128(u128 v);
mpz_class mpz_from_u128(u128 v);
bool fits_u64(const mpz_class& v);
u64 to_u64(const mpz_class& v);
u128 to_u128(const mpz_class& v);
bool fits_u128(const mpz_class& v);

}  // namespace unitfrac
