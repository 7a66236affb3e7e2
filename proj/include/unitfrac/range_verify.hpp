#pragma once

// Deterministic parallel range verification with checkpoint/resume.
// Workers process contiguous n-blocks; a single merger consumes blocks in
// n order, so summaries and CSV output are byte-identical regardless of
// worker count, block size, or interrupt/resume history.

#include <atomic>
#include <functional>
#include <optional>
#include <string>

#include "unitfrac/smallint.hpp"

namespace unitfrac {

enum class VerifyMode { Exists, Count };
enum class Engine { Oracle, Fast };

struct RangeJob {
    u64 m = 4;
    unsigned k = 3;
    u64 n_begin = 2;
    u64 n_end = 2;  // inclusive
    VerifyMode mode = VerifyMode::Exists;
    Engine engine = Engine::Oracle;
    unsigned workers = 1;
    u64 block_size = 64;
    u64 checkpoint_interval = 1000;  // completed n between checkpoint writes
    std::string checkpoint_path;     // empty: no checkpointing
    bool resume = false;
    u64 stop_after_n = 0;  // stop once this n is merged (0: run to the end)
    std::function<void(u64 n, u64 count)> on_result;  // called in n order (count mode)
};

enum class RangeStatus { Ok, Counterexample, Interrupted };

struct RangeOutcome {
    RangeStatus status = RangeStatus::Ok;
    u64 processed = 0;
    u64 last_completed_n = 0;
    u64 total_solutions = 0;
    u64 min_count = 0;
    u64 argmin_n = 0;
    u64 counterexample_n = 0;  // mode Exists only, 0 when none
    std::string summary;       // deterministic multi-line text
};

RangeOutcome run_range(const RangeJob& job);

// Set from a signal handler to request a clean stop with checkpoint.
std::atomic<bool>& range_interrupt_flag();

// Checkpoint file contents (plain key=value lines, written atomically).
struct Checkpoint {
    unsigned version = 1;
    u64 m = 0;
    unsigned k = 0;
    u64 n_begin = 0, n_end = 0;
    std::string mode, engine;
    u64 last_completed_n = 0;
    u64 total_solutions = 0;
    u64 min_count = 0;
    u64 argmin_n = 0;
};

void write_checkpoint(const std::string& path, const Checkpoint& cp);
std::optional<Checkpoint> read_checkpoint(const std::string& path);

}  // namespace unitfrac
