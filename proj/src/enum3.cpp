#include "unitfrac/enum3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "unitfrac/arith.hpp"

namespace unitfrac {

namespace {

// Reduced denominators above these limits are rejected: beyond them the
// searches are compute-infeasible anyway and intermediates could outgrow
// 128 bits (branch values stay < 2^127 for n <= 1e11, see the magnitude
// notes on each branch).
constexpr u64 kEnum3MaxN = 100000000000ull;  // 1e11
constexpr u64 kScanMaxN = 2000000000ull;     // 2e9
constexpr u64 kOracleMaxN = 50000000ull;     // 5e7

constexpr u64 kSieveCap = 1ull << 23;  // SPF sieve size cap per call

struct ReducedPair {
    u64 m = 0, n = 0;
    bool empty = false;  // m/n > k/1, no solutions
};

ReducedPair reduce_for_k(const Fraction& f, unsigned k, u64 max_n, const char* who) {
    Fraction r = f.reduce();
    ReducedPair out;
    if (r.num > k * r.den) {
        out.empty = true;
        return out;
    }
    if (!fits_u64(r.den) || to_u64(r.den) > max_n)
        throw std::domain_error(std::string(who) +
                                ": reduced denominator exceeds the supported native range");
    out.n = to_u64(r.den);
    out.m = to_u64(r.num);  // <= k * n, fits
    return out;
}

// num/den when the division is exact, with a single-word fast path.
inline bool exact_div(u128 num, u128 den, u128& q) {
    if (num < den) return false;
    if ((num >> 64) == 0) {
        const u64 n64 = static_cast<u64>(num), d64 = static_cast<u64>(den);
        if (n64 % d64 != 0) return false;
        q = n64 / d64;
        return true;
    }
    if (num % den != 0) return false;
    q = num / den;
    return true;
}

inline u128 gcd_mixed(u128 a, u128 b) {
    if (((a | b) >> 64) == 0) return gcd_u64(static_cast<u64>(a), static_cast<u64>(b));
    return gcd_u128(a, b);
}

// Factorizations backed by a smallest-prime-factor sieve; values beyond
// the sieve fall back to the generic factorizer.
class FactorCache {
  public:
    explicit FactorCache(u64 need) {
        u64 limit = std::min<u64>(need + 1, kSieveCap);
        if (limit < 4096) limit = 0;  // not worth building
        if (limit > 0) {
            spf_.assign(limit, 0);
            for (u64 i = 2; i < limit; ++i) {
                if (spf_[i] != 0) continue;
                for (u64 j = i; j < limit; j += i)
                    if (spf_[j] == 0) spf_[j] = static_cast<u32>(i);
            }
        }
    }

    void factor_into(u64 v, std::vector<Factor64>& out) const {
        out.clear();
        if (v < spf_.size()) {
            while (v > 1) {
                const u64 p = spf_[v];
                unsigned e = 0;
                do {
                    v /= p;
                    ++e;
                } while (v % p == 0);
                out.push_back({p, e});
            }
            return;
        }
        out = factor_u64(v);
    }

  private:
    std::vector<u32> spf_;
};

struct Ctx {
    u64 m, n;
    u64 q1 = 0, q2 = 0, q3 = 0;  // n / n_i for the current pattern
    FactorCache cache;
    std::vector<std::vector<u64>> split_divisors;  // divisors of 1..min(Bmax, cap)
    std::vector<Factor64> fac;                     // scratch
    std::vector<u64> divs_scratch;

    Ctx(u64 m_, u64 n_, u64 bmax) : m(m_), n(n_), cache(sieve_need(n_, bmax)) {
        const u64 precomputed = std::min<u64>(bmax, 1u << 16);
        split_divisors.resize(precomputed + 1);
        std::vector<Factor64> f;
        for (u64 v = 1; v <= precomputed; ++v) {
            cache.factor_into(v, f);
            split_divisors[v] = divisors_u64(f);
        }
    }

    static u64 sieve_need(u64 n, u64 bmax) {
        // the largest sieved values are N/m (branches Y/Z) and R <= 2 n B
        const u128 v = static_cast<u128>(n) * bmax * 2 + n;
        return v > kSieveCap ? kSieveCap : static_cast<u64>(v);
    }

    const std::vector<u64>& splits(u64 v) {
        if (v < split_divisors.size()) return split_divisors[v];
        cache.factor_into(v, fac);
        divs_scratch = divisors_u64(fac);
        return divs_scratch;
    }

    void set_pattern(const Pattern3& p) {
        q1 = n / p.n1;
        q2 = n / p.n2;
        q3 = n / p.n3;
    }
};

u64 max_branch_bound(u64 m, u64 n) {
    // C = 36/(n1^2 d23) peaks at n1 = d23 = 1
    u128 num, t;
    if (!mul_check_u128(static_cast<u128>(n) * n, n, t) || !mul_check_u128(t, 36, num))
        throw std::domain_error("enumerate3: n exceeds the native 128-bit range");
    return ififth_root_u128(num / (static_cast<u128>(m) * m));
}

// Same fields as derive_constants but without materializing the exact
// rational C; the fused search only needs the bound and the d_ij.
Pattern3 derive_fast(u64 m, u64 n, u64 n1, u64 n2, u64 n3) {
    Pattern3 p;
    p.n1 = n1;
    p.n2 = n2;
    p.n3 = n3;
    p.d12 = gcd_u64(n / n1, n / n2);
    p.d13 = gcd_u64(n / n1, n / n3);
    p.d23 = gcd_u64(n / n2, n / n3);
    const u128 num = static_cast<u128>(36) * n * n * n;
    u128 div = static_cast<u128>(p.n1) * p.n1;
    bool over = !mul_check_u128(div, p.d23, div) || !mul_check_u128(div, m, div) ||
                !mul_check_u128(div, m, div);
    p.bound = over ? 0 : ififth_root_u128(num / div);
    return p;
}

u64 modinv_u64(u64 a, u64 mod) {
    // extended Euclid; requires gcd(a, mod) = 1, mod >= 2
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(mod), newr = static_cast<long long>(a % mod);
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += static_cast<long long>(mod);
    return static_cast<u64>(t);
}

struct CongruenceSteps {
    u64 first = 1, step = 1;
};

// Smallest y >= 1 with a y = r (mod mod) and the step between solutions;
// nullopt when the congruence has none.
std::optional<CongruenceSteps> solve_linear_congruence(u64 a, u64 r, u64 mod) {
    if (mod == 1) return CongruenceSteps{1, 1};
    a %= mod;
    r %= mod;
    const u64 g = a == 0 ? mod : gcd_u64(a, mod);
    if (r % g != 0) return std::nullopt;
    const u64 m2 = mod / g;
    if (m2 == 1) return CongruenceSteps{1, 1};
    const u64 inv = modinv_u64(a / g, m2);
    u64 y0 = mulmod_u64(inv, (r / g) % m2, m2);
    if (y0 == 0) y0 = m2;
    return CongruenceSteps{y0, m2};
}

// a1 = n1 t1 <= 3n/m for any sorted solution; candidates violating this
// can never validate.
bool t1_cap_ok(const Ctx& c, u64 n1, u128 x12, u128 x13, u128 x123) {
    u128 t;
    if (!mul_check_u128(x12, x13, t)) return false;
    if (!mul_check_u128(t, x123, t)) return false;
    if (!mul_check_u128(t, static_cast<u128>(c.m) * n1, t)) return false;
    return t <= static_cast<u128>(3) * c.n;
}

// DFS over divisors d of the factored value; `chosen` records the
// exponent vector of d for a nested pass over the cofactor.
template <typename Leaf>
void for_divisors(const std::vector<Factor64>& fac, size_t i, u64 acc, unsigned* chosen,
                  Leaf&& leaf) {
    if (i == fac.size()) {
        leaf(acc);
        return;
    }
    u64 pw = 1;
    for (unsigned e = 0;; ++e) {
        chosen[i] = e;
        for_divisors(fac, i + 1, acc * pw, chosen, leaf);
        if (e == fac[i].e) break;
        pw *= fac[i].p;
    }
}

// DFS over divisors of value/d where d used up the `used` exponents.
// With `coprime_to_used`, primes present in d are excluded entirely
// (incomparable relative gcds are coprime, so the second factor of a
// quad never shares a prime with the first).
template <bool coprime_to_used, typename Leaf>
void for_remaining_divisors(const std::vector<Factor64>& fac, size_t i, u64 acc,
                            const unsigned* used, Leaf&& leaf) {
    if (i == fac.size()) {
        leaf(acc);
        return;
    }
    u64 pw = 1;
    const unsigned cap = (coprime_to_used && used[i] > 0) ? 0 : fac[i].e - used[i];
    for (unsigned e = 0;; ++e) {
        for_remaining_divisors<coprime_to_used>(fac, i + 1, acc * pw, used, leaf);
        if (e == cap) break;
        pw *= fac[i].p;
    }
}

// Branch Y: y in 1..B with m x13 x23 x123 = d12 y + n/n3; x12 recovered
// from the balance equation.
void branch_y(Ctx& c, const Pattern3& p, bool pruned, std::vector<ParamQuad>& out) {
    unsigned chosen[64];
    // x13 <= t1 = x12 x13 x123 <= 3n/(m n1)
    const u64 x13cap = pruned ? 3 * c.q1 / c.m : UINT64_MAX;
    // m | d12 y + q3 restricts y to one residue class (or none)
    const auto cong = solve_linear_congruence(p.d12, (c.m - c.q3 % c.m) % c.m, c.m);
    if (!cong) return;
    for (u64 y = cong->first; y <= p.bound; y += cong->step) {
        const u128 big_n = static_cast<u128>(p.d12) * y + c.q3;
        const u64 v = static_cast<u64>(big_n / c.m);  // = x13 x23 x123
        const u128 denom = big_n - c.q3;              // = d12 y > 0
        c.cache.factor_into(v, c.fac);
        auto inner = [&](u64 x13) {
            if (x13 > x13cap) return;
            const u64 rest = v / x13;  // = x23 x123 >= x23
            // ordering forces n1 x13 <= n2 x23
            if (pruned && static_cast<u128>(p.n1) * x13 > static_cast<u128>(p.n2) * rest)
                return;
            if (pruned && gcd_u64(x13, p.d13) != 1) return;
            auto leaf = [&](u64 x23) {
                if (pruned) {
                    if (static_cast<u128>(p.n1) * x13 > static_cast<u128>(p.n2) * x23) return;
                    if (gcd_u64(x23, p.d23) != 1) return;
                }
                const u64 x123 = rest / x23;
                const u128 numer =
                    static_cast<u128>(c.q1) * x23 + static_cast<u128>(c.q2) * x13;
                u128 x12;
                if (!exact_div(numer, denom, x12)) return;
                if (pruned) {
                    if (static_cast<u128>(p.n2) * x12 > static_cast<u128>(p.n3) * x13) return;
                    if (!t1_cap_ok(c, p.n1, x12, x13, x123)) return;
                    if (gcd_mixed(x12, x13) != 1 || gcd_mixed(x12, x23) != 1 ||
                        gcd_mixed(x12, p.d12) != 1)
                        return;
                }
                out.push_back({x12, x13, x23, x123});
            };
            if (pruned)
                for_remaining_divisors<true>(c.fac, 0, 1, chosen, leaf);
            else
                for_remaining_divisors<false>(c.fac, 0, 1, chosen, leaf);
        };
        for_divisors(c.fac, 0, 1, chosen, inner);
    }
}

// Branch Z: z in 1..B with m x12 x13 x123 = d23 z + n/n1; x23 recovered
// from the balance equation.
void branch_z(Ctx& c, const Pattern3& p, bool pruned, std::vector<ParamQuad>& out) {
    u64 zmax = p.bound;
    if (pruned) {
        // d23 z + n/n1 = m t1 <= 3n/n1, so z <= 2n/(n1 d23)
        zmax = std::min<u64>(zmax, 2 * c.q1 / p.d23);
    }
    unsigned chosen[64];
    const auto cong = solve_linear_congruence(p.d23, (c.m - c.q1 % c.m) % c.m, c.m);
    if (!cong) return;
    for (u64 z = cong->first; z <= zmax; z += cong->step) {
        const u128 big_n = static_cast<u128>(p.d23) * z + c.q1;
        const u64 v = static_cast<u64>(big_n / c.m);  // = x12 x13 x123 = t1
        if (pruned && static_cast<u128>(c.m) * p.n1 * v > static_cast<u128>(3) * c.n)
            continue;  // t1 cap applies to the whole product here
        const u128 denom = big_n - c.q1;  // = d23 z > 0
        c.cache.factor_into(v, c.fac);
        auto inner = [&](u64 x12) {
            const u64 rest = v / x12;  // = x13 x123 >= x13
            // ordering forces n2 x12 <= n3 x13
            if (pruned && static_cast<u128>(p.n2) * x12 > static_cast<u128>(p.n3) * rest)
                return;
            if (pruned && gcd_u64(x12, p.d12) != 1) return;
            auto leaf = [&](u64 x13) {
                if (pruned) {
                    if (static_cast<u128>(p.n2) * x12 > static_cast<u128>(p.n3) * x13) return;
                    if (gcd_u64(x13, p.d13) != 1) return;
                }
                const u64 x123 = rest / x13;
                const u128 numer =
                    static_cast<u128>(c.q2) * x13 + static_cast<u128>(c.q3) * x12;
                u128 x23;
                if (!exact_div(numer, denom, x23)) return;
                if (pruned) {
                    if (static_cast<u128>(p.n1) * x13 > static_cast<u128>(p.n2) * x23) return;
                    if (gcd_mixed(x23, x12) != 1 || gcd_mixed(x23, x13) != 1 ||
                        gcd_mixed(x23, p.d23) != 1)
                        return;
                }
                out.push_back({x12, x13, x23, x123});
            };
            if (pruned)
                for_remaining_divisors<true>(c.fac, 0, 1, chosen, leaf);
            else
                for_remaining_divisors<false>(c.fac, 0, 1, chosen, leaf);
        };
        for_divisors(c.fac, 0, 1, chosen, inner);
    }
}

// Branch P: P = x12 x13 in 1..B over coprime splits; x23 divides
// R = z x23; x123 recovered from the balance equation.
void branch_p(Ctx& c, const Pattern3& p, bool pruned, std::vector<ParamQuad>& out) {
    const u64 s2 = c.q2 / p.d23, s3 = c.q3 / p.d23;  // exact by definition of d23
    u64 pmax = p.bound;
    if (pruned) pmax = std::min<u64>(pmax, 3 * c.q1 / c.m);  // P <= t1 <= 3n/(m n1)
    for (u64 prod = 1; prod <= pmax; ++prod) {
        for (u64 x12 : c.splits(prod)) {
            const u64 x13 = prod / x12;
            if (gcd_u64(x12, x13) != 1) continue;  // incomparable index sets
            if (pruned) {
                if (static_cast<u128>(p.n2) * x12 > static_cast<u128>(p.n3) * x13) continue;
                if (gcd_u64(x12, p.d12) != 1 || gcd_u64(x13, p.d13) != 1) continue;
            }
            const u64 r = s2 * x13 + s3 * x12;  // = z x23 <= 2nB, fits u64
            c.cache.factor_into(r, c.fac);
            const u128 pre = static_cast<u128>(c.q2) * x13 + static_cast<u128>(c.q3) * x12;
            const u128 mbase = static_cast<u128>(c.m) * prod;  // = m x12 x13
            unsigned chosen[64];
            for_divisors(c.fac, 0, 1, chosen, [&](u64 x23) {
                if (pruned) {
                    if (static_cast<u128>(p.n1) * x13 > static_cast<u128>(p.n2) * x23) return;
                    if (gcd_u64(x23, x12) != 1 || gcd_u64(x23, x13) != 1 ||
                        gcd_u64(x23, p.d23) != 1)
                        return;
                }
                const u128 numer = static_cast<u128>(c.q1) * x23 + pre;
                u128 denom;
                if (!mul_check_u128(mbase, x23, denom)) return;
                u128 x123;
                if (!exact_div(numer, denom, x123)) return;
                if (pruned && !t1_cap_ok(c, p.n1, x12, x13, x123)) return;
                out.push_back({x12, x13, x23, x123});
            });
        }
    }
}

// Divisors of w that are <= cap, via the native factorizer when w fits a
// word and the GMP one otherwise.
std::vector<u64> divisors_u128_leq(u128 w, u64 cap) {
    std::vector<std::pair<u64, unsigned>> pps;
    if (w <= static_cast<u128>(UINT64_MAX)) {
        for (const auto& [p, e] : factor_u64(static_cast<u64>(w)))
            if (p <= cap) pps.emplace_back(p, e);
    } else {
        Factorization f = factorize(mpz_from_u128(w));
        for (const auto& [p, e] : f.factors)
            if (fits_u64(p) && to_u64(p) <= cap) pps.emplace_back(to_u64(p), e);
    }
    std::vector<u64> out{1};
    for (const auto& [p, e] : pps) {
        size_t base = out.size();
        for (size_t j = 0; j < base; ++j) {
            u64 cur = out[j];
            for (unsigned i = 1; i <= e; ++i) {
                if (cur > cap / p) break;
                cur *= p;
                out.push_back(cur);
            }
        }
    }
    return out;
}

// Branch Q: Q = x12 x123 in 1..B over all splits; (w, z) ranges over the
// divisor pairs of W, x13 and x23 recovered exactly. The pruned search
// walks the few admissible x13 directly when the t1 cap leaves a short
// range, skipping the W factorization; validation accepts the same quads
// either way.
void branch_q(Ctx& c, const Pattern3& p, bool pruned, std::vector<ParamQuad>& out) {
    const u128 den_t = static_cast<u128>(p.n3) * p.d13 * p.d23;
    const u128 w_base = static_cast<u128>(c.q1 / p.d13) * (c.q2 / p.d23);
    const u64 zcap = pruned ? 2 * c.q1 / p.d23 : UINT64_MAX;  // same cap as branch Z
    u64 qmax = p.bound;
    if (pruned) qmax = std::min<u64>(qmax, 3 * c.q1 / c.m);  // Q <= t1 <= 3n/(m n1)
    for (u64 prod = 1; prod <= qmax; ++prod) {
        const u64 x13cap = pruned ? 3 * c.q1 / c.m / prod : UINT64_MAX;  // prod * x13 <= t1 cap
        for (u64 x12 : c.splits(prod)) {
            const u64 x123 = prod / x12;  // {1,2} and {1,2,3} are comparable: any split
            if (pruned && gcd_u64(x12, p.d12) != 1) continue;
            if (pruned && x13cap <= 96) {
                // short direct walk over x13; x23 from the balance equation
                const u128 mq = static_cast<u128>(c.m) * prod;
                // ordering n2 x12 <= n3 x13 gives the lower end
                const u128 lo128 = (static_cast<u128>(p.n2) * x12 + p.n3 - 1) / p.n3;
                if (lo128 > x13cap) continue;
                const u64 x13lo = std::max<u64>(1, static_cast<u64>(lo128));
                for (u64 x13 = x13lo; x13 <= x13cap; ++x13) {
                    if (gcd_u64(x13, x12) != 1 || gcd_u64(x13, p.d13) != 1) continue;
                    const u128 denom128 = mq * x13;
                    if (denom128 <= c.q1) continue;  // m x12 x13 x123 - n/n1 must be > 0
                    const u128 denom = denom128 - c.q1;
                    const u128 numer =
                        static_cast<u128>(c.q2) * x13 + static_cast<u128>(c.q3) * x12;
                    u128 x23;
                    if (!exact_div(numer, denom, x23)) continue;
                    if (static_cast<u128>(p.n1) * x13 > static_cast<u128>(p.n2) * x23) continue;
                    if (gcd_mixed(x23, x12) != 1 || gcd_mixed(x23, x13) != 1 ||
                        gcd_mixed(x23, p.d23) != 1)
                        continue;
                    out.push_back({x12, x13, x23, x123});
                }
                continue;
            }
            // W = (n/(n1 d13))(n/(n2 d23)) + n m x12^2 x123 / (n3 d13 d23)
            u128 numt = static_cast<u128>(c.n) * c.m;
            if (!mul_check_u128(numt, x12, numt)) continue;
            if (!mul_check_u128(numt, prod, numt)) continue;  // x12^2 x123 = x12 prod
            if (numt % den_t != 0) continue;
            const u128 w = w_base + numt / den_t;
            const u128 x13den = static_cast<u128>(c.m) * prod;  // = m x12 x123
            for (u64 z : divisors_u128_leq(w, zcap)) {
                const u128 x13num = static_cast<u128>(p.d23) * z + c.q1;
                u128 x13;
                if (!exact_div(x13num, x13den, x13)) continue;
                if (pruned) {
                    if (x13 > x13cap) continue;
                    u128 lhs;
                    if (!mul_check_u128(p.n2, x12, lhs)) continue;
                    u128 rhs;
                    if (!mul_check_u128(p.n3, x13, rhs)) continue;
                    if (lhs > rhs) continue;
                    if (gcd_mixed(x13, x12) != 1 || gcd_mixed(x13, p.d13) != 1) continue;
                }
                u128 t;
                if (!mul_check_u128(static_cast<u128>(c.q2), x13, t)) continue;
                const u128 x23num = t + static_cast<u128>(c.q3) * x12;
                const u128 x23den = static_cast<u128>(p.d23) * z;  // = m x12 x13 x123 - n/n1
                u128 x23;
                if (!exact_div(x23num, x23den, x23)) continue;
                if (pruned) {
                    u128 lhs, rhs;
                    if (!mul_check_u128(p.n1, x13, lhs) || !mul_check_u128(p.n2, x23, rhs))
                        continue;
                    if (lhs > rhs) continue;
                }
                out.push_back({x12, x13, x23, x123});
            }
        }
    }
}

void run_branch(Ctx& c, const Pattern3& p, BranchKind kind, bool pruned,
                std::vector<ParamQuad>& out) {
    switch (kind) {
        case BranchKind::Y: branch_y(c, p, pruned, out); break;
        case BranchKind::Z: branch_z(c, p, pruned, out); break;
        case BranchKind::P12_13: branch_p(c, p, pruned, out); break;
        case BranchKind::Q12_123: branch_q(c, p, pruned, out); break;
    }
}

// Fast validation path on 128-bit words; falls back to exact GMP
// arithmetic when any product overflows.
std::optional<std::array<mpz_class, 3>> validate_quad_mpz(u64 m, u64 n, const Pattern3& p,
                                                          const ParamQuad& q) {
    const mpz_class x12 = mpz_from_u128(q.x12), x13 = mpz_from_u128(q.x13),
                    x23 = mpz_from_u128(q.x23), x123 = mpz_from_u128(q.x123);
    if (gcd(x12, x13) != 1 || gcd(x12, x23) != 1 || gcd(x13, x23) != 1) return std::nullopt;
    if (gcd(x12, mpz_class(p.d12)) != 1 || gcd(x13, mpz_class(p.d13)) != 1 ||
        gcd(x23, mpz_class(p.d23)) != 1)
        return std::nullopt;
    const mpz_class q1 = n / p.n1, q2 = n / p.n2, q3 = n / p.n3;
    if (m * x12 * x13 * x23 * x123 != q1 * x23 + q2 * x13 + q3 * x12) return std::nullopt;
    const mpz_class t1 = x12 * x13 * x123, t2 = x12 * x23 * x123, t3 = x13 * x23 * x123;
    if (gcd(t1, q1) != 1 || gcd(t2, q2) != 1 || gcd(t3, q3) != 1) return std::nullopt;
    std::array<mpz_class, 3> a{p.n1 * t1, p.n2 * t2, p.n3 * t3};
    if (a[0] > a[1] || a[1] > a[2]) return std::nullopt;
    if (m * a[0] * a[1] * a[2] != mpz_class(n) * (a[1] * a[2] + a[0] * a[2] + a[0] * a[1]))
        return std::nullopt;
    return a;
}

}  // namespace

std::vector<ParamQuad> enumerate_branch(u64 m, u64 n, const Pattern3& p, BranchKind kind,
                                        bool pruned) {
    if (m < 1 || n < 1) throw std::invalid_argument("enumerate_branch: m, n must be positive");
    std::vector<ParamQuad> out;
    if (m > 3 * n) return out;
    Ctx c(m, n, std::max<u64>(p.bound, 1));
    c.set_pattern(p);
    run_branch(c, p, kind, pruned, out);
    return out;
}

std::optional<QuadParams> quad_parameters(u64 m, u64 n, const Pattern3& p, const ParamQuad& q) {
    (void)m;
    const mpz_class q1 = n / p.n1, q2 = n / p.n2, q3 = n / p.n3;
    const mpz_class x12 = mpz_from_u128(q.x12), x13 = mpz_from_u128(q.x13),
                    x23 = mpz_from_u128(q.x23);
    QuadParams out;
    mpz_class num = q1 / p.d12 * x23 + q2 / p.d12 * x13;
    if (!mpz_divisible_p(num.get_mpz_t(), x12.get_mpz_t())) return std::nullopt;
    out.y = num / x12;
    num = q2 / p.d23 * x13 + q3 / p.d23 * x12;
    if (!mpz_divisible_p(num.get_mpz_t(), x23.get_mpz_t())) return std::nullopt;
    out.z = num / x23;
    num = q1 / p.d13 * x23 + q3 / p.d13 * x12;
    if (!mpz_divisible_p(num.get_mpz_t(), x13.get_mpz_t())) return std::nullopt;
    out.w = num / x13;
    return out;
}

std::optional<std::array<mpz_class, 3>> validate_quad(u64 m, u64 n, const Pattern3& p,
                                                      const ParamQuad& q) {
    if (q.x12 == 0 || q.x13 == 0 || q.x23 == 0 || q.x123 == 0) return std::nullopt;
    // cheap native checks first; every reject here is final
    if (gcd_mixed(q.x12, q.x13) != 1 || gcd_mixed(q.x12, q.x23) != 1 ||
        gcd_mixed(q.x13, q.x23) != 1)
        return std::nullopt;
    if (gcd_mixed(q.x12, p.d12) != 1 || gcd_mixed(q.x13, p.d13) != 1 ||
        gcd_mixed(q.x23, p.d23) != 1)
        return std::nullopt;
    const u64 q1 = n / p.n1, q2 = n / p.n2, q3 = n / p.n3;
    u128 t1, t2, t3, mx12, lhs;
    bool nat = mul_check_u128(q.x12, q.x13, t1) && mul_check_u128(t1, q.x123, t1) &&
               mul_check_u128(q.x12, q.x23, t2) && mul_check_u128(t2, q.x123, t2) &&
               mul_check_u128(q.x13, q.x23, t3) && mul_check_u128(t3, q.x123, t3) &&
               mul_check_u128(m, q.x12, mx12) && mul_check_u128(mx12, t3, lhs);
    if (!nat) return validate_quad_mpz(m, n, p, q);
    u128 r1, r2, r3, a1, a2, a3;
    nat = mul_check_u128(q1, q.x23, r1) && mul_check_u128(q2, q.x13, r2) &&
          mul_check_u128(q3, q.x12, r3) && mul_check_u128(p.n1, t1, a1) &&
          mul_check_u128(p.n2, t2, a2) && mul_check_u128(p.n3, t3, a3);
    if (!nat) return validate_quad_mpz(m, n, p, q);
    u128 rhs = r1;
    if (__builtin_add_overflow(rhs, r2, &rhs) || __builtin_add_overflow(rhs, r3, &rhs))
        return validate_quad_mpz(m, n, p, q);
    if (lhs != rhs) return std::nullopt;
    if (gcd_mixed(t1, q1) != 1 || gcd_mixed(t2, q2) != 1 || gcd_mixed(t3, q3) != 1)
        return std::nullopt;
    if (a1 > a2 || a2 > a3) return std::nullopt;
    // exact rational identity, restated independently of the balance check
    const mpz_class z1 = mpz_from_u128(a1), z2 = mpz_from_u128(a2), z3 = mpz_from_u128(a3);
    if (m * z1 * z2 * z3 != mpz_class(n) * (z2 * z3 + z1 * z3 + z1 * z2)) return std::nullopt;
    return std::array<mpz_class, 3>{z1, z2, z3};
}

std::set<Solution> enumerate3(const Fraction& f, const mpz_class& min_first) {
    ReducedPair r = reduce_for_k(f, 3, kEnum3MaxN, "enumerate3");
    std::set<Solution> out;
    if (r.empty) return out;
    const u64 m = r.m, n = r.n;
    const std::vector<u64> divs = divisors_u64(factor_u64(n));
    Ctx ctx(m, n, max_branch_bound(m, n));
    std::map<std::array<mpz_class, 3>, std::array<u64, 3>> seen;  // tuple -> emitting pattern
    std::vector<ParamQuad> quads;
    for (u64 n1 : divs) {
        // a1 = n1 t1 <= 3n/m rules larger n1 out entirely
        if (static_cast<u128>(n1) * m > static_cast<u128>(3) * n) continue;
        for (u64 n2 : divs) {
            for (u64 n3 : divs) {
                const Pattern3 p = derive_fast(m, n, n1, n2, n3);
                ctx.set_pattern(p);
                for (BranchKind kind : {BranchKind::Y, BranchKind::Z, BranchKind::P12_13,
                                        BranchKind::Q12_123}) {
                    quads.clear();
                    run_branch(ctx, p, kind, true, quads);
                    for (const ParamQuad& quad : quads) {
                        auto a = validate_quad(m, n, p, quad);
                        if (!a) continue;
                        auto [it, fresh] = seen.emplace(*a, std::array<u64, 3>{n1, n2, n3});
                        if (!fresh && it->second != std::array<u64, 3>{n1, n2, n3})
                            throw std::logic_error(
                                "enumerate3: one tuple emitted by two distinct patterns");
                        if ((*a)[0] >= min_first) out.insert({(*a)[0], (*a)[1], (*a)[2]});
                    }
                }
            }
        }
    }
    return out;
}

namespace {

// Scan a <= b with 1/a + 1/b = m2/n2 (reduced), a >= amin. T is a type
// wide enough for n2 * a.
template <typename T, typename Emit>
void scan_pairs(u64 m2, u64 n2, u64 amin, Emit&& emit) {
    u64 lo = n2 / m2 + 1;
    if (lo < amin) lo = amin;
    const u64 hi = static_cast<u64>((static_cast<u128>(2) * n2) / m2);
    for (u64 a = lo; a <= hi; ++a) {
        const T d = static_cast<T>(m2) * a - n2;
        const T na = static_cast<T>(n2) * a;
        if (na % d == 0) emit(a, static_cast<u128>(na / d));
    }
}

template <typename Emit>
void solve_two_scan(u64 m2, u64 n2, u64 amin, Emit&& emit) {
    // u64 suffices when n2 * (2 n2 / m2) cannot overflow
    if (static_cast<u128>(n2) * n2 / m2 <= (static_cast<u128>(1) << 62))
        scan_pairs<u64>(m2, n2, amin, emit);
    else
        scan_pairs<u128>(m2, n2, amin, emit);
}

}  // namespace

std::set<Solution> solve_two(const Fraction& f, const mpz_class& min_first) {
    ReducedPair r = reduce_for_k(f, 2, kScanMaxN, "solve_two");
    std::set<Solution> out;
    if (r.empty) return out;
    u64 amin = 1;
    if (min_first > 1) {
        if (!fits_u64(min_first)) return out;  // min above every possible a1
        amin = to_u64(min_first);
    }
    solve_two_scan(r.m, r.n, amin,
                   [&](u64 a, u128 b) { out.insert({mpz_class(a), mpz_from_u128(b)}); });
    return out;
}

std::set<Solution> oracle3(const Fraction& f) {
    ReducedPair r = reduce_for_k(f, 3, kOracleMaxN, "oracle3");
    std::set<Solution> out;
    if (r.empty) return out;
    const u64 m = r.m, n = r.n;
    for (u64 a1 = n / m + 1; static_cast<u128>(m) * a1 <= static_cast<u128>(3) * n; ++a1) {
        const u64 rnum = m * a1 - n;
        const u64 rden = n * a1;  // n <= 5e7, a1 <= 3n/m: fits u64
        const u64 g = gcd_u64(rnum, rden);
        solve_two_scan(rnum / g, rden / g, a1, [&](u64 a2, u128 a3) {
            out.insert({mpz_class(a1), mpz_class(a2), mpz_from_u128(a3)});
        });
    }
    return out;
}

std::optional<Solution> first_solution3(const Fraction& f) {
    ReducedPair r = reduce_for_k(f, 3, kScanMaxN, "first_solution3");
    if (r.empty) return std::nullopt;
    const u64 m = r.m, n = r.n;
    std::vector<u64> stack;
    for (u64 a1 = n / m + 1; static_cast<u128>(m) * a1 <= static_cast<u128>(3) * n; ++a1) {
        const u64 rnum = m * a1 - n;
        const u128 rden = static_cast<u128>(n) * a1;
        const u64 g = static_cast<u64>(gcd_u128(rnum, rden));
        const u64 m1 = rnum / g;
        const u128 n1w = rden / g;
        if (n1w > UINT64_MAX) continue;  // unreachable for n <= 2e9
        const u64 n1 = static_cast<u64>(n1w);
        // solutions for this a1 are divisors d | n1^2 with d <= n1 and
        // m1 | d + n1; the smallest admissible d gives the smallest a2
        // (the scan-order first).
        const u64 a2lo = std::max(a1, n1 / m1 + 1);
        const u128 dlo = static_cast<u128>(m1) * a2lo - n1;
        if (dlo > n1) continue;
        auto fac = factor_u64(n1);
        // walk divisors of n1^2 (doubled exponents) staying <= n1
        stack.assign(1, 1);
        for (const auto& [p, e] : fac) {
            const size_t base = stack.size();
            for (size_t j = 0; j < base; ++j) {
                u64 cur = stack[j];
                for (unsigned i = 1; i <= 2 * e; ++i) {
                    if (cur > n1 / p) break;
                    cur *= p;
                    stack.push_back(cur);
                }
            }
        }
        u64 best = 0;
        for (u64 d : stack) {
            if (d < dlo || (d + n1) % m1 != 0) continue;
            if (best == 0 || d < best) best = d;
        }
        if (best == 0) continue;
        const u64 a2 = (n1 + best) / m1;
        const u128 e2 = static_cast<u128>(n1) * n1 / best;
        const u128 a3num = e2 + n1;
        if (a3num % m1 != 0) continue;  // unreachable: gcd(m1, n1) = 1
        return Solution{mpz_class(a1), mpz_class(a2), mpz_from_u128(a3num / m1)};
    }
    return std::nullopt;
}

}  // namespace unitfrac
