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

#include "scanforge/exec/bench.h"

#include <fmt/format.h>

#include <ostream>
#include <thread>

#include "scanforge/exec/parallel.h"
#include "scanforge/exec/speedup.h"
#include "scanforge/ops.h"

namespace scanforge::exec {

namespace {

struct DelayedAdd {
    std::chrono::nanoseconds delay;
    std::int64_t operator()(const std::int64_t &a, const std::int64_t &b) const {
        std::this_thread::sleep_for(delay);
        return a + b;
    }
};

std::uint64_t time_wall(const Kernel &kernel, const std::vector<std::int64_t> &values, std::size_t workers,
                        std::chrono::nanoseconds delay) {
    auto start = std::chrono::steady_clock::now();
    std::visit([&](const auto &k) { run_parallel(k, values, DelayedAdd{delay}, workers); }, kernel);
    auto stop = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

std::uint64_t time_virtual(const Kernel &kernel, const std::vector<std::int64_t> &values, std::size_t workers,
                           std::uint64_t op_ticks) {
    return std::visit(
        [&](const auto &k) {
            return run_parallel_detailed(k, values, add_op(), workers, Clock::kVirtual, op_ticks).ticks;
        },
        kernel);
}

}  // namespace

std::vector<BenchRow> bench(const BenchConfig &config) {
    if (config.trials < 1) {
        throw std::invalid_argument("bench needs trials >= 1");
    }
    std::vector<BenchRow> rows;
    for (std::size_t p : config.ps) {
        if (p < 2) {
            throw std::invalid_argument("bench needs p >= 2");
        }
        const std::vector<std::int64_t> values(p, 1);
        const std::size_t workers = config.workers == 0 ? p : config.workers;
        auto measure = [&](const Kernel &kernel) -> std::uint64_t {
            if (config.virtual_clock) {
                // The simulated clock is deterministic; one run is the minimum.
                return time_virtual(kernel, values, workers, config.op_ticks);
            }
            for (std::size_t w = 0; w < config.warmup; ++w) {
                time_wall(kernel, values, workers, config.op_cost);
            }
            return min_over_trials(config.trials,
                                   [&] { return time_wall(kernel, values, workers, config.op_cost); });
        };
        BenchRow row;
        row.p = p;
        row.t_serial = measure(config.baseline);
        row.t_parallel = measure(config.candidate);
        row.measured_ratio = row.t_parallel == 0 ? 0.0 : double(row.t_serial) / double(row.t_parallel);
        row.model_ratio = speedup_model(static_cast<std::int64_t>(p)).value();
        rows.push_back(row);
    }
    return rows;
}

void write_csv(const std::vector<BenchRow> &rows, bool virtual_clock, std::ostream &out) {
    const char *unit = virtual_clock ? "ticks" : "ns";
    out << fmt::format("p,t_serial_{0},t_parallel_{0},measured_ratio,model_ratio\n", unit);
    for (const auto &r : rows) {
        out << fmt::format("{},{},{},{:.6f},{:.6f}\n", r.p, r.t_serial, r.t_parallel, r.measured_ratio,
                           r.model_ratio);
    }
}

}  // namespace scanforge::exec
