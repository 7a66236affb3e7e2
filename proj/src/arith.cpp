#include "unitfrac/arith.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace unitfrac {

namespace {

// Pollard rho (Brent variant) on mpz. Seeded deterministically from the
// value and the attempt number; retried with a new seed until it splits.
mpz_class rho_mpz(const mpz_class& n, unsigned attempt) {
    u64 base = mpz_fdiv_ui(n.get_mpz_t(), 0x7fffffffull);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(base ^ (0x9e3779b97f4a7c15ull * (attempt + 1))));
    mpz_class x = rng.get_z_range(n - 2) + 1;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class y = x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
        for (unsigned long k = 0; k < r && g == 1; k += batch) {
            ys = y;
            unsigned long lim = std::min(batch, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
        }
        r *= 2;
    }
    if (g == n) {
        g = 1;
        while (g == 1) {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        }
    }
    return g;
}

void factor_mpz_rec(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (fits_u64(n)) {
        for (const auto& [p, e] : factor_u64(to_u64(n))) out[mpz_from_u128(p)] += e;
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        out[n] += 1;
        return;
    }
    mpz_class d = n;
    for (unsigned attempt = 0; d == n || d == 1; ++attempt) d = rho_mpz(n, attempt);
    factor_mpz_rec(d, out);
    factor_mpz_rec(n / d, out);
}

}  // namespace

Factorization factorize(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be a positive integer");
    Factorization result;
    result.value = n;
    mpz_class v = n;
    std::map<mpz_class, unsigned> acc;
    for (u32 p : small_primes_1e4()) {
        if (mpz_cmp_ui(v.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
        if (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(v.get_mpz_t(), p));
            acc[mpz_class(p)] = e;
        }
    }
    if (v > 1) factor_mpz_rec(v, acc);
    for (const auto& [p, e] : acc) result.factors.push_back({p, e});
    return result;
}

std::vector<mpz_class> divisors(const Factorization& f) {
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f.factors) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

MultiplicativeStats multiplicative_stats(
    const Factorization& f, std::optional<std::pair<mpz_class, mpz_class>> residue) {
    MultiplicativeStats s;
    s.tau = 1;
    s.omega = f.factors.size();
    s.totient = 1;
    for (const auto& [p, e] : f.factors) {
        s.tau *= e + 1;
        mpz_class pk = 1;
        for (unsigned i = 1; i < e; ++i) pk *= p;
        s.totient *= pk * (p - 1);
    }
    if (residue) {
        const auto& [r, q] = *residue;
        if (q < 1) throw std::invalid_argument("multiplicative_stats: modulus must be >= 1");
        if (gcd(r, q) != 1) throw std::invalid_argument("multiplicative_stats: gcd(r, q) != 1");
        mpz_class rr = ((r % q) + q) % q;
        u64 tc = 0;
        for (const mpz_class& d : divisors(f))
            if (d % q == rr) ++tc;
        u64 oc = 0;
        for (const auto& [p, e] : f.factors)
            if (p % q == rr) ++oc;
        s.tau_in_class = tc;
        s.omega_in_class = oc;
    }
    return s;
}

mpz_class RgcdDecomposition::reconstruct(unsigned i) const {
    mpz_class t = 1;
    for (unsigned mask = 1; mask < entries.size(); ++mask)
        if (mask & (1u << (i - 1))) t *= entries[mask];
    return t;
}

RgcdDecomposition rgcd_decompose(const std::vector<mpz_class>& t) {
    const unsigned k = static_cast<unsigned>(t.size());
    if (k < 1 || k > 16) throw std::invalid_argument("rgcd_decompose: arity must be in 1..16");
    for (const auto& ti : t)
        if (ti < 1) throw std::invalid_argument("rgcd_decompose: entries must be positive");

    const unsigned full = (1u << k) - 1;
    std::vector<mpz_class> g(full + 1);
    for (unsigned mask = 1; mask <= full; ++mask) {
        mpz_class cur = 0;
        for (unsigned i = 0; i < k; ++i)
            if (mask & (1u << i)) cur = gcd(cur, t[i]);
        g[mask] = cur;
    }

    RgcdDecomposition d;
    d.k = k;
    d.entries.assign(full + 1, mpz_class(1));
    // by decreasing |J| so every strict-superset entry is already available
    std::vector<unsigned> order;
    for (unsigned mask = 1; mask <= full; ++mask) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    for (unsigned mask : order) {
        mpz_class denom = 1;
        unsigned comp = full & ~mask;
        // strict supersets of mask are mask | c for nonempty submasks c of comp
        for (unsigned c = comp; c != 0; c = (c - 1) & comp) denom *= d.entries[mask | c];
        if (!mpz_divisible_p(g[mask].get_mpz_t(), denom.get_mpz_t()))
            throw std::logic_error("rgcd_decompose: non-exact division, internal inconsistency");
        d.entries[mask] = g[mask] / denom;
    }
    return d;
}

mpz_class lcm_lebesgue(const std::vector<mpz_class>& t) {
    const unsigned k = static_cast<unsigned>(t.size());
    if (k < 1 || k > 16) throw std::invalid_argument("lcm_lebesgue: arity must be in 1..16");
    mpz_class num = 1, den = 1;
    const unsigned full = (1u << k) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        mpz_class cur = 0;
        for (unsigned i = 0; i < k; ++i)
            if (mask & (1u << i)) cur = gcd(cur, t[i]);
        if (std::popcount(mask) % 2 == 1)
            num *= cur;
        else
            den *= cur;
    }
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("lcm_lebesgue: non-exact division");
    return num / den;
}

mpz_class spaced_binomial_sum(unsigned long n, unsigned long u) {
    if (u < 1) throw std::invalid_argument("spaced_binomial_sum: u must be >= 1");
    mpz_class total = 0, term;
    for (unsigned long j = 0; j <= n; j += u) {
        mpz_bin_uiui(term.get_mpz_t(), n, j);
        total += term;
        if (j + u < j) break;  // overflow of the loop counter
    }
    return total;
}

mpz_class order_mod(const mpz_class& a, const mpz_class& q) {
    if (q < 1) throw std::invalid_argument("order_mod: modulus must be >= 1");
    if (q == 1) return 1;
    mpz_class aa = ((a % q) + q) % q;
    if (gcd(aa, q) != 1) throw std::invalid_argument("order_mod: gcd(a, q) != 1");
    Factorization qf = factorize(q);
    mpz_class phi = multiplicative_stats(qf).totient;
    mpz_class result;
    for (const mpz_class& d : divisors(factorize(phi))) {
        mpz_powm(result.get_mpz_t(), aa.get_mpz_t(), d.get_mpz_t(), q.get_mpz_t());
        if (result == 1) return d;
    }
    throw std::logic_error("order_mod: no order found below phi(q)");
}

}  // namespace unitfrac
