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

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

#include "gtest/gtest.h"
#include "scanforge/exec/bench.h"
#include "scanforge/exec/parallel.h"
#include "scanforge/exec/speedup.h"
#include "scanforge/kernels.h"
#include "scanforge/ops.h"
#include "test_util.h"

using namespace scanforge;
using namespace scanforge::exec;
using scanforge::testing::oracle_scan;

namespace {

std::int64_t plus(const std::int64_t &a, const std::int64_t &b) {
    return a + b;
}

std::vector<std::int64_t> iota(std::size_t n) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::int64_t(i + 1);
    return v;
}

template <typename K>
TaskGraph graph_of(const K &kernel, std::size_t n, std::size_t workers) {
    return run_parallel_detailed(kernel, iota(n), plus, workers, Clock::kVirtual).graph;
}

struct JitteredConcat {
    std::string operator()(const std::string &a, const std::string &b) const {
        thread_local std::mt19937 rng(std::hash<std::thread::id>{}(std::this_thread::get_id()));
        std::this_thread::sleep_for(std::chrono::microseconds(rng() % 200));
        return a + b;
    }
};

}  // namespace

TEST(remote_op, result_lives_with_right_operand) {
    ThreadedRuntime rt(4);
    auto a = Future<std::int64_t>::resolved(rt.next_id(), 1, 3);
    auto b = Future<std::int64_t>::resolved(rt.next_id(), 2, 4);
    auto add = lift_remote<std::int64_t>(plus, rt);
    auto c = add(a, b);
    EXPECT_EQ(c.owner(), 2u);
    EXPECT_EQ(c.fetch(), 7);
    EXPECT_TRUE(c.ready());
    ASSERT_EQ(rt.graph().size(), 1u);
    EXPECT_EQ(rt.graph().nodes()[0].left_owner, 1u);
    EXPECT_EQ(rt.graph().nodes()[0].out_owner, 2u);
}

TEST(remote_op, chained_results) {
    ThreadedRuntime rt(3);
    auto add = lift_remote<std::int64_t>(plus, rt);
    auto acc = Future<std::int64_t>::resolved(rt.next_id(), 0, 0);
    for (std::int64_t k = 1; k <= 20; ++k) {
        acc = add(acc, Future<std::int64_t>::resolved(rt.next_id(), std::size_t(k) % 3, k));
    }
    EXPECT_EQ(acc.fetch(), 210);
}

TEST(remote_op, errors_poison_downstream_results) {
    ThreadedRuntime rt(2);
    auto failing = lift_remote<std::int64_t>(
        [](const std::int64_t &, const std::int64_t &) -> std::int64_t { throw std::runtime_error("boom"); }, rt);
    auto add = lift_remote<std::int64_t>(plus, rt);
    auto a = Future<std::int64_t>::resolved(rt.next_id(), 0, 1);
    auto b = Future<std::int64_t>::resolved(rt.next_id(), 1, 2);
    auto bad = failing(a, b);
    auto downstream = add(bad, a);
    EXPECT_THROW(bad.fetch(), std::runtime_error);
    EXPECT_THROW(downstream.fetch(), std::runtime_error);
}

TEST(run_parallel, brent_kung_eight_workers) {
    auto out = run_parallel(BrentKungKernel{}, iota(8), plus, 8);
    EXPECT_EQ(out, (std::vector<std::int64_t>{1, 3, 6, 10, 15, 21, 28, 36}));
}

TEST(run_parallel, single_worker) {
    auto out = run_parallel(BrentKungKernel{}, iota(13), plus, 1);
    EXPECT_EQ(out, oracle_scan(iota(13), plus));
}

TEST(run_parallel, concat_keeps_operand_order_under_jitter) {
    std::mt19937_64 rng(7);
    auto input = scanforge::testing::random_strings(rng, 24);
    auto expected = oracle_scan(input, [](const std::string &a, const std::string &b) { return a + b; });
    for (int rep = 0; rep < 5; ++rep) {
        EXPECT_EQ(run_parallel(BrentKungKernel{}, input, JitteredConcat{}, 4), expected);
        EXPECT_EQ(run_parallel(ScanThenFanKernel{3}, input, JitteredConcat{}, 4), expected);
    }
}

TEST(run_parallel, empty_and_singleton) {
    EXPECT_TRUE(run_parallel(BrentKungKernel{}, std::vector<std::int64_t>{}, plus, 4).empty());
    EXPECT_EQ(run_parallel(BrentKungKernel{}, std::vector<std::int64_t>{5}, plus, 4), (std::vector<std::int64_t>{5}));
}

TEST(run_parallel, rejects_zero_workers) {
    EXPECT_THROW(run_parallel(SerialKernel{}, iota(4), plus, 0), std::invalid_argument);
}

TEST(run_parallel, task_counts_match_trace) {
    EXPECT_EQ(graph_of(BrentKung8Kernel{}, 8, 8).size(), 11u);
    EXPECT_EQ(graph_of(BrentKungKernel{}, 8, 8).size(), 11u);
    EXPECT_EQ(graph_of(SerialKernel{}, 8, 8).size(), 7u);
}

TEST(run_parallel, results_stay_home) {
    for (std::size_t n : {5, 8, 17}) {
        ThreadedRuntime rt(4);
        auto store = FutureStore<std::int64_t>::seed(iota(n), rt);
        BrentKungKernel{}(store, lift_remote<std::int64_t>(plus, rt));
        for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(store.get(i).owner(), rt.home_of(i)) << n << " " << i;
        EXPECT_EQ(store.fetch_all(), oracle_scan(iota(n), plus));
    }
}

TEST(run_parallel, deterministic_across_worker_counts) {
    std::mt19937_64 rng(11);
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t n : {0, 1, 2, 3, 7, 8, 9, 31, 64}) {
        auto input = scanforge::testing::random_ints(rng, n);
        auto expected = oracle_scan(input, plus);
        for (std::size_t w : {std::size_t{1}, std::size_t{2}, std::size_t{4}, hw}) {
            EXPECT_EQ(run_parallel(BrentKungKernel{}, input, plus, w), expected) << n << " " << w;
            EXPECT_EQ(run_parallel(ScanThenFanKernel{2}, input, plus, w), expected) << n << " " << w;
            EXPECT_EQ(run_parallel_detailed(BrentKungKernel{}, input, plus, w, Clock::kVirtual).values, expected);
        }
    }
}

TEST(critical_path, known_graphs) {
    EXPECT_EQ(critical_path(graph_of(BrentKungKernel{}, 8, 8), 1), 5u);
    EXPECT_EQ(critical_path(graph_of(BrentKung8Kernel{}, 8, 8), 1), 5u);
    EXPECT_EQ(critical_path(graph_of(SerialKernel{}, 8, 8), 1), 7u);
    EXPECT_EQ(critical_path(graph_of(BrentKungKernel{}, 2, 2), 1), 1u);
    EXPECT_EQ(critical_path(graph_of(BrentKungKernel{}, 8, 8), 3), 15u);
    EXPECT_EQ(critical_path(TaskGraph{}, 1), 0u);
}

TEST(critical_path, cycle_is_rejected) {
    TaskGraph g;
    g.add(TaskNode{1, 3, 1, 2, 0, 1, 1});
    g.add(TaskNode{2, 2, 4, 3, 2, 3, 3});
    EXPECT_THROW(critical_path(g, 1), std::logic_error);
}

TEST(critical_path, predecessors_include_worker_order) {
    auto g = graph_of(SerialKernel{}, 4, 4);
    EXPECT_TRUE(g.predecessors(0).empty());
    EXPECT_EQ(g.predecessors(1), (std::vector<std::size_t>{0}));
}

TEST(critical_path, simulation_agrees) {
    for (std::size_t n = 2; n <= 64; ++n) {
        for (std::size_t w : {n, std::size_t{4}}) {
            auto g = graph_of(BrentKungKernel{}, n, w);
            EXPECT_EQ(simulate_ticks(g, 1), critical_path(g, 1)) << n << " " << w;
            auto s = graph_of(SerialKernel{}, n, w);
            EXPECT_EQ(simulate_ticks(s, 2), critical_path(s, 2)) << n << " " << w;
        }
    }
}

TEST(critical_path, depth_closed_form) {
    // One datum per worker: stage count is floor(log2 n) + 1 + floor(log2(n/3)).
    for (std::size_t n : {4, 8, 16, 32, 64}) {
        auto expected = std::floor(std::log2(double(n))) + 1 + std::floor(std::log2(double(n) / 3));
        EXPECT_EQ(double(critical_path(graph_of(BrentKungKernel{}, n, n), 1)), expected) << n;
        EXPECT_EQ(critical_path(graph_of(SerialKernel{}, n, n), 1), n - 1);
    }
}

TEST(speedup, model_values) {
    EXPECT_EQ(speedup_model(2), Ratio::of(1, 1));
    EXPECT_EQ(speedup_model(8), Ratio::of(7, 5));
    EXPECT_DOUBLE_EQ(speedup_model(8).value(), 1.4);
    EXPECT_EQ(speedup_model(80), Ratio::of(79, 11));
    EXPECT_THROW(speedup_model(1), std::invalid_argument);
    EXPECT_THROW(speedup_model(0), std::invalid_argument);
    std::ostringstream s;
    s << speedup_model(80);
    EXPECT_EQ(s.str(), "79/11");
}

TEST(speedup, ratio_normalises) {
    EXPECT_EQ(Ratio::of(6, 4), (Ratio{3, 2}));
    EXPECT_EQ(Ratio::of(3, -6), (Ratio{-1, 2}));
    EXPECT_THROW(Ratio::of(1, 0), std::invalid_argument);
}

TEST(speedup, floor_log2_third_matches_float) {
    EXPECT_EQ(floor_log2_third(1), -2);
    EXPECT_EQ(floor_log2_third(2), -1);
    for (std::int64_t p = 1; p <= 5000; ++p) {
        EXPECT_EQ(floor_log2_third(p), std::int64_t(std::floor(std::log2(double(p) / 3.0)))) << p;
    }
}

TEST(bench, virtual_ratio_equals_model) {
    BenchConfig cfg;
    cfg.ps = {2, 4, 5, 8, 16, 32};
    cfg.virtual_clock = true;
    for (const auto &row : bench(cfg)) {
        EXPECT_EQ(Ratio::of(std::int64_t(row.t_serial), std::int64_t(row.t_parallel)),
                  speedup_model(std::int64_t(row.p)))
            << row.p;
    }
}

TEST(bench, rejects_bad_config) {
    BenchConfig cfg;
    cfg.ps = {1};
    cfg.virtual_clock = true;
    EXPECT_THROW(bench(cfg), std::invalid_argument);
    cfg.ps = {4};
    cfg.trials = 0;
    EXPECT_THROW(bench(cfg), std::invalid_argument);
}

TEST(bench, min_over_trials) {
    std::vector<std::uint64_t> samples{5, 3, 4};
    std::size_t i = 0;
    EXPECT_EQ(min_over_trials(3, [&] { return samples[i++]; }), 3u);
    EXPECT_EQ(i, 3u);
    EXPECT_THROW(min_over_trials(0, [] { return std::uint64_t{1}; }), std::invalid_argument);
}

TEST(bench, csv) {
    std::ostringstream out;
    write_csv({BenchRow{8, 7, 5, 1.4, 1.4}}, true, out);
    EXPECT_EQ(out.str(), "p,t_serial_ticks,t_parallel_ticks,measured_ratio,model_ratio\n8,7,5,1.400000,1.400000\n");
    std::ostringstream wall;
    write_csv({}, false, wall);
    EXPECT_EQ(wall.str(), "p,t_serial_ns,t_parallel_ns,measured_ratio,model_ratio\n");
}
