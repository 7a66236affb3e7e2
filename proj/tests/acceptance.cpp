// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any hard criterion fails. Each check recomputes its expectations from
// independent oracles (brute-force scans, direct summation, recursion).

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "unitfrac/arith.hpp"
#include "unitfrac/bench.hpp"
#include "unitfrac/enum3.hpp"
#include "unitfrac/enum_k.hpp"
#include "unitfrac/generators.hpp"
#include "unitfrac/range_verify.hpp"

using namespace unitfrac;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

Outcome ok(std::string d = "") { return {true, std::move(d)}; }
Outcome fail(std::string d) { return {false, std::move(d)}; }

// ---- criterion 1: enumerate3 == oracle3 for m in 1..12, n in 2..400 ----
Outcome criterion_oracle_equivalence() {
    u64 checked = 0;
    for (u64 m = 1; m <= 12; ++m)
        for (u64 n = 2; n <= 400; ++n) {
            Fraction f(m, n);
            if (enumerate3(f) != oracle3(f)) {
                std::ostringstream s;
                s << "mismatch at m=" << m << " n=" << n;
                return fail(s.str());
            }
            ++checked;
        }
    return ok(std::to_string(checked) + " fractions compared");
}

// ---- criterion 2: known counts via independent brute force ----
void brute_rec(const mpq_class& residual, unsigned remaining, const mpz_class& min_a,
               std::vector<mpz_class>& prefix, std::set<Solution>& out) {
    const mpz_class& num = residual.get_num();
    const mpz_class& den = residual.get_den();
    if (remaining == 1) {
        if (num == 1 && den >= min_a) {
            Solution s = prefix;
            s.push_back(den);
            out.insert(std::move(s));
        }
        return;
    }
    mpz_class lo = den / num + 1;
    if (lo < min_a) lo = min_a;
    mpz_class hi = remaining * den / num;
    for (mpz_class a = lo; a <= hi; ++a) {
        mpq_class next = residual - mpq_class(1, a);
        if (next <= 0) continue;
        prefix.push_back(a);
        brute_rec(next, remaining - 1, a, prefix, out);
        prefix.pop_back();
    }
}

std::set<Solution> brute_k(const Fraction& f, unsigned k) {
    Fraction r = f.reduce();
    std::set<Solution> out;
    if (r.num > k * r.den) return out;
    std::vector<mpz_class> prefix;
    mpq_class residual(r.num, r.den);
    brute_rec(residual, k, 1, prefix, out);
    return out;
}

Outcome criterion_known_counts() {
    struct Fix {
        unsigned k;
        unsigned long m, n;
        size_t expect;
    };
    const std::vector<Fix> fixtures = {{3, 1, 1, 3}, {3, 2, 1, 1}, {3, 4, 3, 3},
                                       {3, 4, 5, 2}, {4, 1, 1, 14}, {4, 2, 1, 4}};
    for (const auto& fx : fixtures) {
        const Fraction f(fx.m, fx.n);
        const size_t brute = brute_k(f, fx.k).size();
        const size_t production = fx.k == 3 ? enumerate3(f).size() : enumerate_k(f, fx.k).size();
        if (brute != fx.expect || production != fx.expect) {
            std::ostringstream s;
            s << "f_" << fx.k << "(" << fx.m << "," << fx.n << "): brute=" << brute
              << " production=" << production << " expected=" << fx.expect;
            return fail(s.str());
        }
    }
    return ok("6 fixtures, brute force and production agree");
}

// ---- criterion 3: Erdos-Straus desk verification to 1e5 ----
Outcome criterion_erdos_straus() {
    RangeJob job;
    job.m = 4;
    job.k = 3;
    job.n_begin = 2;
    job.n_end = 100000;
    job.mode = VerifyMode::Exists;
    job.engine = Engine::Oracle;
    job.workers = 4;
    job.block_size = 256;
    const RangeOutcome out = run_range(job);
    if (out.status != RangeStatus::Ok) {
        std::ostringstream s;
        s << "status != ok, counterexample_n=" << out.counterexample_n;
        return fail(s.str());
    }
    return ok("f_3(4,n) >= 1 for all 2 <= n <= 1e5");
}

// ---- criterion 4: relative gcd suite ----
Outcome criterion_rgcd() {
    auto fig = rgcd_decompose({90, 126, 616});
    if (fig.x(0b011) != 9 || fig.x(0b110) != 7 || fig.x(0b111) != 2)
        return fail("reference decomposition (90,126,616) wrong");
    std::mt19937_64 rng(20250810);
    for (int iter = 0; iter < 10000; ++iter) {
        const unsigned k = 2 + rng() % 4;
        std::vector<mpz_class> t;
        for (unsigned i = 0; i < k; ++i)
            t.emplace_back(static_cast<unsigned long>(rng() % 1000000 + 1));
        auto d = rgcd_decompose(t);
        for (unsigned i = 1; i <= k; ++i)
            if (d.reconstruct(i) != t[i - 1]) return fail("reconstruction failed");
        const unsigned full = (1u << k) - 1;
        for (unsigned a = 1; a <= full; ++a)
            for (unsigned b = a + 1; b <= full; ++b) {
                if ((a & b) == a || (a & b) == b) continue;
                if (gcd(d.x(a), d.x(b)) != 1) return fail("incomparable coprimality failed");
            }
    }
    return ok("10000 random tuples + the (90,126,616) reference decomposition");
}

// ---- criterion 5: five-factor coverage ----
Outcome criterion_five_factor() {
    u64 solutions_checked = 0;
    for (u64 m = 1; m <= 6; ++m) {
        for (u64 n = 2; n <= 400; ++n) {
            const Fraction r = Fraction(m, n).reduce();
            if (r.num > 3 * r.den) continue;
            const u64 rm = to_u64(r.num), rn = to_u64(r.den);
            for (const Solution& s : oracle3(r)) {
                std::array<u64, 3> pat;
                std::vector<mpz_class> t(3);
                for (int i = 0; i < 3; ++i) {
                    mpz_class g = gcd(s[i], mpz_class(rn));
                    pat[i] = to_u64(g);
                    t[i] = s[i] / g;
                }
                auto d = rgcd_decompose(t);
                for (unsigned bit = 0; bit < 3; ++bit)
                    if (d.x(1u << bit) != 1) return fail("x_i != 1 for a genuine solution");
                ParamQuad quad{to_u128(d.x(0b011)), to_u128(d.x(0b101)), to_u128(d.x(0b110)),
                               to_u128(d.x(0b111))};
                const Pattern3 p = derive_constants(rm, rn, pat);
                auto params = quad_parameters(rm, rn, p, quad);
                if (!params) return fail("y/z/w not integral for a genuine solution");
                const mpz_class p1 = mpz_from_u128(quad.x12) * mpz_from_u128(quad.x13);
                const mpz_class p2 = mpz_from_u128(quad.x12) * mpz_from_u128(quad.x123);
                const mpz_class bound(static_cast<unsigned long>(p.bound));
                if (!(params->y <= bound || params->z <= bound || p1 <= bound || p2 <= bound)) {
                    std::ostringstream os;
                    os << "no factor within B at m=" << m << " n=" << n;
                    return fail(os.str());
                }
                ++solutions_checked;
            }
        }
    }
    return ok(std::to_string(solutions_checked) + " solutions covered");
}

// ---- criterion 6: composite generator ----
Outcome criterion_composite() {
    for (unsigned r = 0; r <= 3; ++r) {
        for (unsigned long m = 1; m <= 3; ++m) {
            const CompositeResult res = gen_composite(make_composite_spec(r, m));
            const Fraction target(res.spec.m, res.spec.n);
            for (const Solution& s : res.solutions)
                if (!exact_unit_sum(s, target)) return fail("identity failed");
            mpz_class six_r;
            mpz_ui_pow_ui(six_r.get_mpz_t(), 6, r);
            if (mpz_class(res.solutions.size()) < (six_r + 1) / 2)
                return fail("count below the certified bound");
            if (r <= 2) {
                const auto full = enumerate3(target);
                for (const Solution& s : res.solutions)
                    if (!full.count(s)) return fail("generated triple missing from enumerate3");
            }
        }
    }
    return ok("r in 0..3, m in 1..3: verified, distinct, bound met, subset of enumerate3");
}

// ---- criterion 7: prime-family fixtures ----
Outcome criterion_prime_family() {
    auto a = gen_prime_family(4, 3, 4, 2);
    if (a.spec.p != 139 || a.solutions.size() != 3) return fail("(4,3,4,2): p or count wrong");
    Solution want1{mpz_class(35), mpz_class(5838), mpz_class(29190)};
    if (!a.solutions.count(want1)) return fail("(4,3,4,2): missing (35,5838,29190)");
    if (a.spec.p % 4 != 3) return fail("(4,3,4,2): p not = e (mod f)");
    for (const Solution& s : a.solutions)
        if (!exact_unit_sum(s, Fraction(4, 139))) return fail("(4,3,4,2): identity failed");

    auto b = gen_prime_family(4, 1, 4, 2);
    if (b.spec.p != 877 || b.solutions.size() != 2) return fail("(4,1,4,2): p or count wrong");
    Solution want2{mpz_class(220), mpz_class(77176), mpz_class(385880)};
    if (!b.solutions.count(want2)) return fail("(4,1,4,2): missing (220,77176,385880)");
    if (b.spec.p % 4 != 1) return fail("(4,1,4,2): p not = e (mod f)");
    for (const Solution& s : b.solutions)
        if (!exact_unit_sum(s, Fraction(4, 877))) return fail("(4,1,4,2): identity failed");
    return ok("p=139 with 3 solutions, p=877 with 2 solutions, residues verified");
}

// ---- criterion 8: growth of count3 on primorials ----
Outcome criterion_growth() {
    mpz_class primorial = 1, p = 1;
    std::ostringstream detail;
    for (unsigned r = 1; r <= 5; ++r) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primorial *= p;
        const std::size_t count = enumerate3(Fraction(mpz_class(1), primorial)).size();
        mpz_class six_r;
        mpz_ui_pow_ui(six_r.get_mpz_t(), 6, r);
        const mpz_class bound = (six_r + 1) / 2;
        if (mpz_class(count) < bound) {
            std::ostringstream s;
            s << "count3(1," << primorial << ")=" << count << " < " << bound;
            return fail(s.str());
        }
        detail << "f3(1," << primorial << ")=" << count << ">=" << bound << " ";
    }
    return ok(detail.str());
}

// ---- criterion 9: identity suites ----
Outcome criterion_identities() {
    const long double pi = acosl(-1.0L);
    for (unsigned long n = 0; n <= 40; ++n)
        for (unsigned long u = 1; u <= 8; ++u) {
            std::complex<long double> acc = 0;
            for (unsigned long j = 0; j < u; ++j) {
                auto xi = std::polar(1.0L, 2.0L * pi * static_cast<long double>(j) / u);
                acc += std::pow(std::complex<long double>(1.0L) + xi, static_cast<int>(n));
            }
            mpz_class rounded(static_cast<unsigned long>(roundl(acc.real() / u)));
            if (spaced_binomial_sum(n, u) != rounded) return fail("spaced binomial mismatch");
        }
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 1000; ++iter) {
        unsigned k = 1 + rng() % 5;
        std::vector<mpz_class> t;
        mpz_class direct = 1;
        for (unsigned i = 0; i < k; ++i) {
            t.emplace_back(static_cast<unsigned long>(rng() % 1000000 + 1));
            direct = lcm(direct, t.back());
        }
        if (lcm_lebesgue(t) != direct) return fail("Lebesgue lcm mismatch");
    }
    return ok("binomial identity (n<=40, u<=8) and 1000 lcm tuples exact");
}

// ---- criterion 10: determinism across workers and interrupt/resume ----
Outcome criterion_determinism() {
    auto count_run = [](unsigned workers, u64 block) {
        RangeJob job;
        job.m = 4;
        job.n_begin = 2;
        job.n_end = 1200;
        job.mode = VerifyMode::Count;
        job.workers = workers;
        job.block_size = block;
        return run_range(job).summary;
    };
    const std::string w1 = count_run(1, 64);
    if (w1 != count_run(4, 64)) return fail("count summaries differ between 1 and 4 workers");
    if (w1 != count_run(4, 7)) return fail("count summary depends on block size");

    auto exists_run = [](unsigned workers) {
        RangeJob job;
        job.m = 4;
        job.n_begin = 2;
        job.n_end = 20000;
        job.mode = VerifyMode::Exists;
        job.workers = workers;
        return run_range(job).summary;
    };
    if (exists_run(1) != exists_run(4))
        return fail("exists summaries differ between 1 and 4 workers");

    const std::string path = "acceptance_determinism.ckpt";
    RangeJob cold;
    cold.m = 4;
    cold.n_begin = 2;
    cold.n_end = 1200;
    cold.mode = VerifyMode::Count;
    cold.workers = 4;
    cold.checkpoint_path = path;
    const std::string cold_summary = run_range(cold).summary;
    RangeJob half = cold;
    half.stop_after_n = 601;  // the range midpoint
    if (run_range(half).status != RangeStatus::Interrupted)
        return fail("midpoint interruption not reported");
    RangeJob rest = cold;
    rest.resume = true;
    const std::string resumed = run_range(rest).summary;
    std::remove(path.c_str());
    if (resumed != cold_summary) return fail("resumed summary differs from the cold run");
    return ok("byte-identical summaries: workers {1,3,4}, block sizes, interrupt/resume");
}

// ---- criterion 11 (report-only): scaling bench ----
Outcome criterion_bench() {
    std::vector<u64> primes;
    for (u64 base : {1000ull, 10000ull, 100000ull}) {
        mpz_class p(static_cast<unsigned long>(base));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        primes.push_back(to_u64(p));
    }
    const BenchReport rep = run_bench(4, primes, 1);
    if (!rep.enum3_slope || !rep.oracle_slope) return fail("slopes missing");
    std::cout << rep.table();
    std::ostringstream s;
    s << "slope enumerate3=" << *rep.enum3_slope << ", oracle3=" << *rep.oracle_slope
      << " (report only)";
    return ok(s.str());
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence k=3 (m<=12, n<=400)", criterion_oracle_equivalence},
        {2, "known counts f_3/f_4", criterion_known_counts},
        {3, "Erdos-Straus verification 2..1e5", criterion_erdos_straus},
        {4, "relative gcd suite", criterion_rgcd},
        {5, "five-factor coverage (m<=6, n<=400)", criterion_five_factor},
        {6, "composite generator bounds", criterion_composite},
        {7, "prime-family fixtures", criterion_prime_family},
        {8, "growth check on primorials", criterion_growth},
        {9, "identity suites", criterion_identities},
        {10, "verify-range determinism", criterion_determinism},
        {11, "scaling bench (report only)", criterion_bench},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = fail(std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  criterion %2d: %s [%.1fs]%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.name, secs, out.detail.empty() ? "" : " -- ", out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
