#include "unitfrac/smallint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace unitfrac {

u128 gcd_u128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

namespace {

std::vector<u32> sieve_primes(u32 limit) {
    std::vector<bool> composite(limit, false);
    std::vector<u32> primes;
    for (u32 i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = static_cast<u64>(i) * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

}  // namespace

const std::vector<u32>& small_primes_1e4() {
    static const std::vector<u32> primes = sieve_primes(10000);
    return primes;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This base set is a proven witness set for every n < 3.3e24.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Brent's cycle variant of Pollard rho; n must be odd, composite, > 1.
u64 brent_rho(u64 n, u64 seed) {
    u64 c = splitmix64(seed) % (n - 1) + 1;
    u64 x = splitmix64(seed ^ 0xabcdefull) % n;
    u64 y = x, ys = x, q = 1, g = 1;
    const u64 batch = 128;
    u64 r = 1;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
        for (u64 k = 0; k < r && g == 1; k += batch) {
            ys = y;
            u64 lim = std::min(batch, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod_u64(y, y, n) + c) % n;
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u64(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        do {
            ys = (mulmod_u64(ys, ys, n) + c) % n;
            g = gcd_u64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(u64 n, std::vector<u64>& primes_out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes_out.push_back(n);
        return;
    }
    u64 d = n;
    for (u64 attempt = 0; d == n || d == 1; ++attempt) {
        d = brent_rho(n, n ^ attempt);
    }
    factor_rec(d, primes_out);
    factor_rec(n / d, primes_out);
}

}  // namespace

std::vector<Factor64> factor_u64(u64 n) {
    if (n == 0) throw std::invalid_argument("factor_u64: n must be >= 1");
    std::vector<Factor64> out;
    for (u32 p : small_primes_1e4()) {
        if (static_cast<u64>(p) * p > n) break;
        if (n % p == 0) {
            unsigned e = 0;
            do {
                n /= p;
                ++e;
            } while (n % p == 0);
            out.push_back({p, e});
        }
    }
    if (n > 1) {
        if (n < 100000000ull || is_prime_u64(n)) {
            // below 1e8 the trial loop above already proved primality
            out.push_back({n, 1});
        } else {
            std::vector<u64> rest;
            factor_rec(n, rest);
            std::sort(rest.begin(), rest.end());
            for (size_t i = 0; i < rest.size();) {
                size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                out.push_back({rest[i], static_cast<unsigned>(j - i)});
                i = j;
            }
        }
    }
    return out;
}

std::vector<u64> divisors_u64(const std::vector<Factor64>& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

u64 value_of(const std::vector<Factor64>& f) {
    u64 v = 1;
    for (const auto& [p, e] : f)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

u64 isqrt_u64(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

namespace {

// b^5 if it fits in 128 bits, else saturate.
bool pow5_u128(u64 b, u128& out) {
    u128 sq;
    if (!mul_check_u128(b, b, sq)) return false;
    u128 fourth;
    if (!mul_check_u128(sq, sq, fourth)) return false;
    return mul_check_u128(fourth, b, out);
}

}  // namespace

bool mul_check_u128(u128 a, u128 b, u128& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

u64 ififth_root_u128(u128 x) {
    u64 lo = 0, hi = 50859009;  // floor((2^128-1)^(1/5)) + 1
    while (lo + 1 < hi) {
        u64 mid = lo + (hi - lo) / 2;
        u128 p5;
        if (pow5_u128(mid, p5) && p5 <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

mpz_class mpz_from_u128(u128 v) {
    mpz_class hi(static_cast<unsigned long>(v >> 64));
    mpz_class lo(static_cast<unsigned long>(v & ~0ull));
    return (hi << 64) + lo;
}

bool fits_u64(const mpz_class& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const mpz_class& v) {
    // unsigned long is 64-bit on this platform
    return mpz_get_ui(v.get_mpz_t());
}

bool fits_u128(const mpz_class& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 128;
}

u128 to_u128(const mpz_class& v) {
    mpz_class hi = v >> 64;
    mpz_class lo = v - (hi << 64);
    return (static_cast<u128>(mpz_get_ui(hi.get_mpz_t())) << 64) | mpz_get_ui(lo.get_mpz_t());
}

}  // namespace unitfrac
