// Copyright 2026 The ScanForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCANFORGE_EXEC_BENCH_H
#define SCANFORGE_EXEC_BENCH_H

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <vector>

#include "scanforge/kernels.h"

namespace scanforge::exec {

struct BenchConfig {
    Kernel baseline = SerialKernel{};
    Kernel candidate = BrentKungKernel{};
    std::vector<std::size_t> ps;
    /// Injected per-operation delay (wall clock).
    std::chrono::nanoseconds op_cost = std::chrono::milliseconds(10);
    /// Per-operation cost on the simulated clock.
    std::uint64_t op_ticks = 1;
    std::size_t trials = 3;
    /// Untimed runs before timing each kernel.
    std::size_t warmup = 1;
    bool virtual_clock = false;
    /// 0 means one worker per datum (p workers).
    std::size_t workers = 0;
};

/// Times are nanoseconds, or ticks with a virtual clock.
struct BenchRow {
    std::size_t p = 0;
    std::uint64_t t_serial = 0;
    std::uint64_t t_parallel = 0;
    double measured_ratio = 0;
    double model_ratio = 0;
};

/// Minimum of `trials` calls to `measure`.
template <typename F>
std::uint64_t min_over_trials(std::size_t trials, F &&measure) {
    if (trials < 1) {
        throw std::invalid_argument("need at least one trial");
    }
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t t = 0; t < trials; ++t) {
        best = std::min<std::uint64_t>(best, measure());
    }
    return best;
}

/// For each p, scans p values with the baseline and candidate kernels under
/// run_parallel, with an addition operator that first waits op_cost.
std::vector<BenchRow> bench(const BenchConfig &config);

/// Header p,t_serial_ns,t_parallel_ns,measured_ratio,model_ratio (or _ticks
/// columns for the virtual clock), one row per p.
void write_csv(const std::vector<BenchRow> &rows, bool virtual_clock, std::ostream &out);

}  // namespace scanforge::exec

#endif
