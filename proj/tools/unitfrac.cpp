// unitfrac: enumerate, count, verify and generate representations of a
// rational m/n as a sum of k unit fractions.
//
// Exit codes: 0 success, 1 mathematical counterexample/mismatch,
// 2 usage or I/O error, 3 search exhaustion.

#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unitfrac/arith.hpp"
#include "unitfrac/bench.hpp"
#include "unitfrac/bounds.hpp"
#include "unitfrac/enum3.hpp"
#include "unitfrac/enum_k.hpp"
#include "unitfrac/generators.hpp"
#include "unitfrac/range_verify.hpp"
#include "unitfrac/records.hpp"

using namespace unitfrac;

namespace {

void handle_sigint(int) { range_interrupt_flag().store(true); }

unsigned env_worker_cap() {
    const char* v = std::getenv("UNITFRAC_MAX_WORKERS");
    if (!v) return 0;
    long n = std::strtol(v, nullptr, 10);
    return n > 0 ? static_cast<unsigned>(n) : 0;
}

void emit_solutions(const std::set<Solution>& sols, const mpz_class& m, const mpz_class& n,
                    unsigned k, const std::string& format, std::ostream& os) {
    if (format == "csv") os << csv_header(k) << '\n';
    for (const Solution& s : sols) {
        SolutionRecord rec{m, n, k, s};
        os << (format == "csv" ? csv_line(rec) : jsonl_line(rec)) << '\n';
    }
}

int cmd_enumerate(const mpz_class& m, const mpz_class& n, unsigned k, const std::string& format,
                  const mpz_class& min_denominator) {
    const Fraction f(m, n);
    std::set<Solution> sols;
    if (k == 3)
        sols = enumerate3(f, min_denominator);
    else {
        sols = enumerate_k(f, k);
        if (min_denominator > 1) {
            std::set<Solution> filtered;
            for (const Solution& s : sols)
                if (s.front() >= min_denominator) filtered.insert(s);
            sols.swap(filtered);
        }
    }
    emit_solutions(sols, m, n, k, format, std::cout);
    std::cerr << "count=" << sols.size() << '\n';
    return 0;
}

int cmd_compare(const mpz_class& m, const mpz_class& n) {
    const Fraction f(m, n);
    const std::set<Solution> fast = enumerate3(f);
    const std::set<Solution> slow = oracle3(f);
    if (fast == slow) {
        std::cout << "equal count=" << fast.size() << '\n';
        return 0;
    }
    for (const Solution& s : slow)
        if (!fast.count(s)) std::cout << "missing " << jsonl_line({m, n, 3, s}) << '\n';
    for (const Solution& s : fast)
        if (!slow.count(s)) std::cout << "extra " << jsonl_line({m, n, 3, s}) << '\n';
    return 1;
}

int cmd_bounds(const mpz_class& m, const mpz_class& n, unsigned k) {
    const BoundReport rep = evaluate_bounds(m, n, k);
    std::cout << "bounds m=" << m << " n=" << n << " k=" << k << '\n';
    for (const auto& e : rep.entries) std::cout << e.tag << " = " << e.value << '\n';
    if (k >= 5) {
        auto thetas = theta_sequence(k >= 5 ? k : 5);
        std::cout << "theta_" << k << " = " << thetas.back() << " (limit 4/3)\n";
    }
    if (n > 2) {
        auto prof = lower_bound_profiles(n, m, mpz_class(1));
        std::cout << "lower_bound_composite_shape exp((log 6) log n/log log n) = "
                  << prof.composite_value << '\n';
    }
    return 0;
}

int cmd_rgcd(const std::vector<std::string>& values) {
    std::vector<mpz_class> t;
    for (const auto& v : values) t.emplace_back(v);
    const RgcdDecomposition d = rgcd_decompose(t);
    for (unsigned size = d.k; size >= 1; --size) {
        for (unsigned mask = 1; mask < (1u << d.k); ++mask) {
            if (static_cast<unsigned>(__builtin_popcount(mask)) != size) continue;
            std::cout << "x{";
            bool first = true;
            for (unsigned i = 0; i < d.k; ++i) {
                if (!(mask & (1u << i))) continue;
                if (!first) std::cout << ',';
                std::cout << (i + 1);
                first = false;
            }
            std::cout << "}=" << d.x(mask) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_sigint);
    CLI::App app{"sums of unit fractions: enumeration, verification, generation"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list all sorted solutions of m/n");
    std::string en_m = "4", en_n = "5", en_min = "1";
    unsigned en_k = 3;
    std::string en_format = "jsonl";
    enumerate->add_option("-m,--numerator", en_m)->required();
    enumerate->add_option("-n,--denominator", en_n)->required();
    enumerate->add_option("-k,--arity", en_k)->check(CLI::Range(2u, 9u));
    enumerate->add_option("--format", en_format)->check(CLI::IsMember({"jsonl", "csv"}));
    enumerate->add_option("--min-denominator", en_min);

    // verify
    auto* verify = app.add_subcommand("verify", "scan a range of denominators");
    RangeJob job;
    std::string vf_mode = "exists", vf_engine = "oracle", vf_checkpoint, vf_output;
    bool vf_resume = false;
    u64 vf_stop_after = 0;
    verify->add_option("-m,--numerator", job.m)->required();
    verify->add_option("-k,--arity", job.k)->check(CLI::Range(2u, 9u));
    verify->add_option("--from", job.n_begin)->required();
    verify->add_option("--to", job.n_end)->required();
    verify->add_option("--mode", vf_mode)->check(CLI::IsMember({"exists", "count"}));
    verify->add_option("--engine", vf_engine)->check(CLI::IsMember({"oracle", "fast"}));
    verify->add_option("--workers", job.workers);
    verify->add_option("--block-size", job.block_size);
    verify->add_option("--checkpoint", vf_checkpoint);
    verify->add_option("--checkpoint-interval", job.checkpoint_interval);
    verify->add_flag("--resume", vf_resume, "continue from the checkpoint file");
    verify->add_option("--stop-after", vf_stop_after,
                       "stop (as if interrupted) once this n is merged");
    verify->add_option("--output", vf_output, "count-mode CSV path (default stdout)");

    // compare
    auto* compare = app.add_subcommand("compare", "diff enumerate3 against oracle3");
    std::string cp_m, cp_n;
    compare->add_option("-m,--numerator", cp_m)->required();
    compare->add_option("-n,--denominator", cp_n)->required();

    // generate
    auto* generate = app.add_subcommand("generate", "constructive solution families");
    std::string gen_kind, gen_format = "jsonl";
    unsigned gen_r = 1;
    std::string gen_m = "1", gen_n = "1", gen_e = "1", gen_f = "1", gen_limit = "0";
    generate->add_option("construction", gen_kind)
        ->required()
        ->check(CLI::IsMember({"composite", "shifted", "prime-family"}));
    generate->add_option("-r,--primes", gen_r);
    generate->add_option("-m,--numerator", gen_m);
    generate->add_option("-n,--denominator", gen_n);
    generate->add_option("-e,--residue", gen_e);
    generate->add_option("-f,--modulus", gen_f);
    generate->add_option("--search-limit", gen_limit);
    generate->add_option("--format", gen_format)->check(CLI::IsMember({"jsonl", "csv"}));

    // bench
    auto* bench = app.add_subcommand("bench", "time enumerate3 vs oracle3");
    std::vector<u64> bench_ns;
    std::vector<u64> bench_primes_near;
    u64 bench_m = 4;
    int bench_reps = 3;
    bench->add_option("-m,--numerator", bench_m);
    bench->add_option("-n,--denominators", bench_ns)->delimiter(',');
    bench->add_option("--primes-near", bench_primes_near)
        ->delimiter(',')
        ->description("replace each value with the next prime at or above it");
    bench->add_option("--reps", bench_reps);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "print bound shapes for (m, n, k)");
    std::string bd_m, bd_n;
    unsigned bd_k = 3;
    bounds->add_option("-m,--numerator", bd_m)->required();
    bounds->add_option("-n,--denominator", bd_n)->required();
    bounds->add_option("-k,--arity", bd_k);

    // rgcd
    auto* rgcd = app.add_subcommand("rgcd", "relative gcd decomposition of a tuple");
    std::vector<std::string> rgcd_values;
    rgcd->add_option("values", rgcd_values)->required()->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*enumerate)
            return cmd_enumerate(mpz_class(en_m), mpz_class(en_n), en_k, en_format,
                                 mpz_class(en_min));
        if (*verify) {
            job.mode = vf_mode == "exists" ? VerifyMode::Exists : VerifyMode::Count;
            job.engine = vf_engine == "oracle" ? Engine::Oracle : Engine::Fast;
            job.checkpoint_path = vf_checkpoint;
            job.resume = vf_resume;
            job.stop_after_n = vf_stop_after;
            if (unsigned cap = env_worker_cap(); cap > 0 && job.workers > cap) job.workers = cap;
            std::ofstream csv_file;
            std::ostream* csv_os = &std::cout;
            if (!vf_output.empty()) {
                // append on resume so the final file equals a cold run's
                csv_file.open(vf_output, vf_resume ? std::ios::app : std::ios::trunc);
                if (!csv_file) {
                    std::cerr << "cannot open output file: " << vf_output << '\n';
                    return 2;
                }
                csv_os = &csv_file;
            }
            if (job.mode == VerifyMode::Count)
                job.on_result = [&](u64 n, u64 c) { *csv_os << n << ',' << c << '\n'; };
            const RangeOutcome out = run_range(job);
            std::cout << out.summary;
            if (out.status == RangeStatus::Counterexample) return 1;
            return 0;
        }
        if (*compare) return cmd_compare(mpz_class(cp_m), mpz_class(cp_n));
        if (*generate) {
            if (gen_kind == "composite") {
                const CompositeResult res = gen_composite(make_composite_spec(gen_r, mpz_class(gen_m)));
                std::cout << "certificate: construction=composite r=" << res.spec.r
                          << " m=" << res.spec.m << " n=" << res.spec.n
                          << " count=" << res.solutions.size() << " bound=" << res.certified_bound
                          << '\n';
                emit_solutions(res.solutions, res.spec.m, res.spec.n, 3, gen_format, std::cout);
            } else if (gen_kind == "shifted") {
                const mpz_class m(gen_m), n(gen_n);
                const std::set<Solution> sols = gen_shifted_divisor(Fraction(m, n));
                std::cout << "certificate: construction=shifted m=" << m << " n=" << n
                          << " count=" << sols.size() << '\n';
                emit_solutions(sols, m, n, 3, gen_format, std::cout);
            } else {
                const PrimeFamilyResult res = gen_prime_family(
                    mpz_class(gen_m), mpz_class(gen_e), mpz_class(gen_f), gen_r,
                    mpz_class(gen_limit));
                std::cout << "certificate: construction=prime-family p=" << res.spec.p
                          << " k=" << res.spec.k << " M=" << res.spec.big_m
                          << " Q=" << res.spec.big_q << " ord=" << res.spec.ord
                          << " count=" << res.solutions.size() << '\n';
                emit_solutions(res.solutions, res.spec.m, res.spec.p, 3, gen_format, std::cout);
            }
            return 0;
        }
        if (*bench) {
            std::vector<u64> ns = bench_ns;
            for (u64 v : bench_primes_near) {
                mpz_class p(static_cast<unsigned long>(v > 0 ? v - 1 : 0));
                mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
                ns.push_back(to_u64(p));
            }
            if (ns.empty()) {
                std::cerr << "bench: no denominators given\n";
                return 2;
            }
            std::cout << run_bench(bench_m, ns, bench_reps).table();
            return 0;
        }
        if (*bounds) return cmd_bounds(mpz_class(bd_m), mpz_class(bd_n), bd_k);
        if (*rgcd) return cmd_rgcd(rgcd_values);
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << " (limit=" << e.limit << ")\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
