#include "unitfrac/range_verify.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "unitfrac/enum3.hpp"
#include "unitfrac/enum_k.hpp"

namespace unitfrac {

std::atomic<bool>& range_interrupt_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

namespace {

const char* mode_name(VerifyMode m) { return m == VerifyMode::Exists ? "exists" : "count"; }
const char* engine_name(Engine e) { return e == Engine::Oracle ? "oracle" : "fast"; }

u64 evaluate_n(u64 m, unsigned k, u64 n, VerifyMode mode, Engine engine) {
    const Fraction f(mpz_class(static_cast<unsigned long>(m)),
                     mpz_class(static_cast<unsigned long>(n)));
    if (mode == VerifyMode::Exists) {
        if (engine == Engine::Fast)
            return k == 3 ? !enumerate3(f).empty() : first_solution_k(f, k).has_value();
        return first_solution_k(f, k).has_value() ? 1 : 0;
    }
    if (k == 3) return engine == Engine::Oracle ? oracle3(f).size() : enumerate3(f).size();
    return enumerate_k(f, k).size();
}

struct BlockResult {
    u64 first_n = 0;
    std::vector<u64> values;
};

}  // namespace

void write_checkpoint(const std::string& path, const Checkpoint& cp) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file: " + tmp);
        out << "version=" << cp.version << '\n';
        out << "m=" << cp.m << '\n';
        out << "k=" << cp.k << '\n';
        out << "range=" << cp.n_begin << ".." << cp.n_end << '\n';
        out << "mode=" << cp.mode << '\n';
        out << "engine=" << cp.engine << '\n';
        out << "last_completed_n=" << cp.last_completed_n << '\n';
        out << "total_solutions=" << cp.total_solutions << '\n';
        out << "min_count=" << cp.min_count << '\n';
        out << "argmin_n=" << cp.argmin_n << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot atomically replace checkpoint file: " + path);
}

std::optional<Checkpoint> read_checkpoint(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint cp;
    std::string line;
    while (std::getline(in, line)) {
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string val = line.substr(eq + 1);
        if (key == "version") cp.version = std::stoul(val);
        else if (key == "m") cp.m = std::stoull(val);
        else if (key == "k") cp.k = std::stoul(val);
        else if (key == "range") {
            auto dots = val.find("..");
            if (dots == std::string::npos) return std::nullopt;
            cp.n_begin = std::stoull(val.substr(0, dots));
            cp.n_end = std::stoull(val.substr(dots + 2));
        } else if (key == "mode") cp.mode = val;
        else if (key == "engine") cp.engine = val;
        else if (key == "last_completed_n") cp.last_completed_n = std::stoull(val);
        else if (key == "total_solutions") cp.total_solutions = std::stoull(val);
        else if (key == "min_count") cp.min_count = std::stoull(val);
        else if (key == "argmin_n") cp.argmin_n = std::stoull(val);
    }
    return cp;
}

RangeOutcome run_range(const RangeJob& job) {
    if (job.n_begin < 1 || job.n_end < job.n_begin)
        throw std::invalid_argument("run_range: invalid range");
    if (job.m < 1) throw std::invalid_argument("run_range: m must be positive");
    if (job.workers < 1) throw std::invalid_argument("run_range: workers must be >= 1");
    if (job.block_size < 1) throw std::invalid_argument("run_range: block size must be >= 1");

    RangeOutcome out;
    u64 start_n = job.n_begin;
    bool have_stats = false;
    if (job.resume) {
        auto cp = read_checkpoint(job.checkpoint_path);
        if (!cp) throw std::runtime_error("run_range: cannot read checkpoint for resume");
        if (cp->m != job.m || cp->k != job.k || cp->n_begin != job.n_begin ||
            cp->n_end != job.n_end || cp->mode != mode_name(job.mode) ||
            cp->engine != engine_name(job.engine))
            throw std::runtime_error("run_range: checkpoint does not match this job");
        start_n = cp->last_completed_n + 1;
        out.total_solutions = cp->total_solutions;
        out.min_count = cp->min_count;
        out.argmin_n = cp->argmin_n;
        out.processed = cp->last_completed_n - job.n_begin + 1;
        out.last_completed_n = cp->last_completed_n;
        have_stats = out.processed > 0;
    }

    const u64 total_blocks =
        start_n > job.n_end ? 0 : (job.n_end - start_n) / job.block_size + 1;

    std::mutex mtx;
    std::condition_variable cv;
    std::map<u64, BlockResult> done;
    std::atomic<u64> next_block{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        for (;;) {
            if (stop.load(std::memory_order_relaxed) ||
                range_interrupt_flag().load(std::memory_order_relaxed))
                return;
            const u64 b = next_block.fetch_add(1, std::memory_order_relaxed);
            if (b >= total_blocks) return;
            BlockResult res;
            res.first_n = start_n + b * job.block_size;
            const u64 last = std::min(job.n_end, res.first_n + job.block_size - 1);
            res.values.reserve(last - res.first_n + 1);
            for (u64 n = res.first_n; n <= last; ++n)
                res.values.push_back(evaluate_n(job.m, job.k, n, job.mode, job.engine));
            {
                std::lock_guard<std::mutex> lock(mtx);
                done.emplace(b, std::move(res));
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    const unsigned nworkers =
        static_cast<unsigned>(std::min<u64>(job.workers, std::max<u64>(total_blocks, 1)));
    pool.reserve(nworkers);
    for (unsigned i = 0; i < nworkers; ++i) pool.emplace_back(worker);

    auto make_cp = [&]() {
        Checkpoint cp;
        cp.m = job.m;
        cp.k = job.k;
        cp.n_begin = job.n_begin;
        cp.n_end = job.n_end;
        cp.mode = mode_name(job.mode);
        cp.engine = engine_name(job.engine);
        cp.last_completed_n = out.last_completed_n;
        cp.total_solutions = out.total_solutions;
        cp.min_count = out.min_count;
        cp.argmin_n = out.argmin_n;
        return cp;
    };

    u64 since_checkpoint = 0;
    bool interrupted = false;
    for (u64 b = 0; b < total_blocks; ++b) {
        BlockResult res;
        {
            std::unique_lock<std::mutex> lock(mtx);
            while (done.count(b) == 0 && !range_interrupt_flag().load(std::memory_order_relaxed))
                cv.wait_for(lock, std::chrono::milliseconds(50),
                            [&] { return done.count(b) > 0; });
            if (done.count(b) == 0) {
                // interrupted while the block was still in flight; stop at
                // the merged prefix
                interrupted = true;
            } else {
                res = std::move(done[b]);
                done.erase(b);
            }
        }
        if (interrupted) {
            if (!job.checkpoint_path.empty() && out.processed > 0)
                write_checkpoint(job.checkpoint_path, make_cp());
            stop.store(true, std::memory_order_relaxed);
            break;
        }
        for (size_t i = 0; i < res.values.size(); ++i) {
            const u64 n = res.first_n + i;
            const u64 v = res.values[i];
            out.processed += 1;
            out.last_completed_n = n;
            out.total_solutions += v;
            if (!have_stats || v < out.min_count) {
                out.min_count = v;
                out.argmin_n = n;
                have_stats = true;
            }
            if (job.on_result && job.mode == VerifyMode::Count) job.on_result(n, v);
            ++since_checkpoint;
            if (job.mode == VerifyMode::Exists && v == 0) {
                out.status = RangeStatus::Counterexample;
                out.counterexample_n = n;
                break;
            }
            if (job.stop_after_n != 0 && n >= job.stop_after_n) {
                interrupted = true;
                break;
            }
        }
        const bool external_stop = range_interrupt_flag().load(std::memory_order_relaxed);
        if (!job.checkpoint_path.empty() &&
            (since_checkpoint >= job.checkpoint_interval ||
             out.status == RangeStatus::Counterexample || interrupted || external_stop ||
             b + 1 == total_blocks)) {
            write_checkpoint(job.checkpoint_path, make_cp());
            since_checkpoint = 0;
        }
        if (out.status == RangeStatus::Counterexample || interrupted || external_stop) {
            if (external_stop) interrupted = true;
            stop.store(true, std::memory_order_relaxed);
            break;
        }
    }
    stop.store(true, std::memory_order_relaxed);
    cv.notify_all();
    for (auto& t : pool) t.join();

    if (interrupted && out.status == RangeStatus::Ok) out.status = RangeStatus::Interrupted;

    std::ostringstream s;
    s << "mode=" << mode_name(job.mode) << " m=" << job.m << " k=" << job.k << " range="
      << job.n_begin << ".." << job.n_end << " engine=" << engine_name(job.engine) << '\n';
    s << "processed=" << out.processed << " total_solutions=" << out.total_solutions
      << " min_count=" << out.min_count << " argmin_n=" << out.argmin_n << '\n';
    switch (out.status) {
        case RangeStatus::Ok: s << "status=ok\n"; break;
        case RangeStatus::Counterexample:
            s << "status=counterexample counterexample_n=" << out.counterexample_n << '\n';
            break;
        case RangeStatus::Interrupted:
            s << "status=interrupted last_completed_n=" << out.last_completed_n << '\n';
            break;
    }
    out.summary = s.str();
    return out;
}

}  // namespace unitfrac
