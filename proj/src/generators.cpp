#include "unitfrac/generators.hpp"

#include <algorithm>

#include "unitfrac/arith.hpp"

namespace unitfrac {

namespace {

std::vector<mpz_class> first_primes(unsigned r) {
    std::vector<mpz_class> ps;
    mpz_class p = 1;
    while (ps.size() < r) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        ps.push_back(p);
    }
    return ps;
}

void insert_verified(std::set<Solution>& out, Solution s, const Fraction& target,
                     const char* who) {
    std::sort(s.begin(), s.end());
    if (!exact_unit_sum(s, target)) throw std::logic_error(std::string(who) + ": identity failed");
    out.insert(std::move(s));
}

}  // namespace

CompositeFamilySpec make_composite_spec(unsigned r, const mpz_class& m) {
    if (r > 12) throw std::invalid_argument("make_composite_spec: r > 12 exceeds desk scale");
    if (m < 1) throw std::invalid_argument("make_composite_spec: m must be >= 1");
    CompositeFamilySpec spec;
    spec.r = r;
    spec.m = m;
    spec.n_prime = 1;
    for (const mpz_class& p : first_primes(r)) spec.n_prime *= p;
    spec.n = m * spec.n_prime;
    return spec;
}

CompositeResult gen_composite(const CompositeFamilySpec& spec) {
    if (spec.r > 12) throw std::invalid_argument("gen_composite: r > 12 exceeds desk scale");
    CompositeResult res;
    res.spec = spec;
    mpz_class six_r;
    mpz_ui_pow_ui(six_r.get_mpz_t(), 6, spec.r);
    res.certified_bound = (six_r + 1) / 2;

    const Fraction target(spec.m, spec.n);  // equals 1/n'
    const std::vector<mpz_class> primes = first_primes(spec.r);
    const unsigned full = (1u << spec.r) - 1;
    std::vector<mpz_class> sub_val(full + 1u, mpz_class(1));
    for (unsigned mask = 1; mask <= full && spec.r > 0; ++mask) {
        unsigned low = static_cast<unsigned>(__builtin_ctz(mask));
        sub_val[mask] = sub_val[mask & (mask - 1)] * primes[low];
    }

    for (unsigned dmask = 0; dmask <= full; ++dmask) {
        const mpz_class& d = sub_val[dmask];
        const mpz_class a1 = spec.n_prime + d;
        const mpz_class big_a = spec.n_prime * (spec.n_prime / d + 1);
        // coprime divisor pairs {d1 <= d2} of the squarefree n': disjoint
        // prime subsets, each unordered pair counted once
        for (unsigned am = 0; am <= full; ++am) {
            const unsigned comp = full & ~am;
            const mpz_class& d1 = sub_val[am];
            for (unsigned bm = comp;; bm = (bm - 1) & comp) {
                const mpz_class& d2 = sub_val[bm];
                if (d1 <= d2) {
                    const mpz_class s = d1 + d2;
                    insert_verified(res.solutions, {a1, big_a / d2 * s, big_a / d1 * s}, target,
                                    "gen_composite");
                }
                if (bm == 0) break;
            }
        }
    }
    return res;
}

std::set<Solution> gen_shifted_divisor(const Fraction& f) {
    const Fraction r = f.reduce();
    const mpz_class& mp = r.num;
    const mpz_class& np = r.den;
    std::set<Solution> out;
    const std::vector<mpz_class> divs = divisors(factorize(np));
    for (const mpz_class& d : divs) {
        if ((np + d) % mp != 0) continue;
        const mpz_class a1 = (np + d) / mp;
        const mpz_class big_a = np / d * a1;  // = n'(n'/d + 1)/m', a multiple of n'
        for (size_t i = 0; i < divs.size(); ++i) {
            for (size_t j = i; j < divs.size(); ++j) {
                if (gcd(divs[i], divs[j]) != 1) continue;
                const mpz_class s = divs[i] + divs[j];
                out.insert({a1, big_a / divs[j] * s, big_a / divs[i] * s});
            }
        }
    }
    std::set<Solution> verified;
    for (Solution s : out) {
        std::sort(s.begin(), s.end());
        if (!exact_unit_sum(s, r)) throw std::logic_error("gen_shifted_divisor: identity failed");
        verified.insert(std::move(s));
    }
    return verified;
}

mpz_class admissible_subset_count(unsigned r, const mpz_class& ord) {
    mpz_class total = 0, term;
    const unsigned long o = ord.get_ui();
    for (unsigned long s = 1; s <= r; s += o) {
        mpz_bin_uiui(term.get_mpz_t(), r, s);
        total += term;
    }
    return total;
}

PrimeFamilyResult gen_prime_family(const mpz_class& m, const mpz_class& e, const mpz_class& f,
                                   unsigned r, const mpz_class& search_limit) {
    if (m < 1 || f < 1) throw std::invalid_argument("gen_prime_family: m, f must be >= 1");
    if (gcd(e, f) != 1) throw std::invalid_argument("gen_prime_family: gcd(e, f) must be 1");
    if (r < 1 || r > 20) throw std::invalid_argument("gen_prime_family: r must be in 1..20");

    PrimeFamilyResult res;
    PrimeFamilySpec& spec = res.spec;
    spec.m = m;
    spec.e = e;
    spec.f = f;
    spec.big_m = lcm(m, f);
    const mpz_class period = m / gcd(m, f);

    // smallest j >= 0 with k = (f-e) + j f >= 1 and k = 1 (mod m/gcd(m,f))
    mpz_class k;
    bool found_k = false;
    for (mpz_class j = 0; j <= period + 1; ++j) {
        k = (f - e) + j * f;
        if (k >= 1 && k % period == 1 % period) {
            found_k = true;
            break;
        }
    }
    if (!found_k) throw std::logic_error("gen_prime_family: no admissible shift k");
    spec.k = k;
    if (gcd(spec.big_m, k) != 1)
        throw std::logic_error("gen_prime_family: gcd(M, k) != 1, construction invalid");

    const mpz_class m_over = spec.big_m / m;
    mpz_class target = (-m_over) % k;
    if (target < 0) target += k;

    mpz_class q = spec.big_m;
    while (spec.q_list.size() < r) {
        mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
        if (q % k == target) spec.q_list.push_back(q);
    }
    spec.big_q = 1;
    for (const mpz_class& qi : spec.q_list) spec.big_q *= qi;
    if (gcd(spec.big_m, spec.big_q) != 1)
        throw std::logic_error("gen_prime_family: gcd(M, Q) != 1");

    spec.ord = order_mod(-m_over, k);

    const mpz_class qm = spec.big_q * spec.big_m;
    mpz_class limit = search_limit;
    if (limit <= 0) limit = qm * qm * qm;
    mpz_class p = (-k) % qm;
    if (p <= 0) p += qm;
    bool found_p = false;
    for (; p <= limit; p += qm) {
        if (p > 1 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0) {
            found_p = true;
            break;
        }
    }
    if (!found_p) throw SearchExhausted(limit);
    spec.p = p;
    if (spec.p % f != ((e % f) + f) % f)
        throw std::logic_error("gen_prime_family: p is not in the residue class e mod f");
    if ((spec.p + k) % (qm) != 0) throw std::logic_error("gen_prime_family: Q M does not divide p+k");

    const Fraction target_frac(m, spec.p);
    const mpz_class x12 = m_over;
    const unsigned long o = spec.ord.get_ui();
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        const unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
        if (size % o != 1 % o) continue;
        mpz_class x13 = 1;
        for (unsigned i = 0; i < r; ++i)
            if (mask & (1u << i)) x13 *= spec.q_list[i];
        if ((x13 + m_over) % k != 0)
            throw std::logic_error("gen_prime_family: x23 not integral");
        const mpz_class x23 = (x13 + m_over) / k;
        if ((spec.p + k) % (spec.big_m * x13) != 0)
            throw std::logic_error("gen_prime_family: x123 not integral");
        const mpz_class x123 = (spec.p + k) / (spec.big_m * x13);
        Solution s{x12 * x13 * x123, spec.p * x12 * x23 * x123, spec.p * x13 * x23 * x123};
        std::sort(s.begin(), s.end());
        if (!exact_unit_sum(s, target_frac))
            throw std::logic_error("gen_prime_family: identity failed");
        if (!res.solutions.insert(std::move(s)).second)
            throw std::logic_error("gen_prime_family: duplicate solution, injectivity violated");
    }
    if (mpz_class(res.solutions.size()) != admissible_subset_count(r, spec.ord))
        throw std::logic_error("gen_prime_family: solution count != admissible subset count");
    return res;
}

}  // namespace unitfrac
