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

#ifndef SCANFORGE_EXEC_PARALLEL_H
#define SCANFORGE_EXEC_PARALLEL_H

#include <cstddef>
#include <exception>
#include <future>
#include <memory>
#include <utility>
#include <vector>

#include "scanforge/exec/future.h"
#include "scanforge/exec/runtime.h"
#include "scanforge/store.h"

namespace scanforge::exec {

/// An operator over futures. Applying it returns at once with a pending
/// future owned by the right operand's owner; a task on that worker fetches
/// both operands (blocking on the left one, which stands in for the data
/// transfer), applies the wrapped operator and resolves the result. Errors
/// from either operand or from the operator poison the result.
template <typename T, typename Op>
class RemoteOp {
   public:
    RemoteOp(Op op, Runtime &runtime) : op_(std::make_shared<const Op>(std::move(op))), runtime_(&runtime) {
    }

    Future<T> operator()(const Future<T> &left, const Future<T> &right) const {
        auto promise = std::make_shared<std::promise<T>>();
        Future<T> out(runtime_->next_id(), right.owner(), promise->get_future().share());
        TaskNode node{runtime_->next_ordinal(), left.id(),    right.id(),   out.id(),
                      left.owner(),             right.owner(), right.owner()};
        runtime_->dispatch(node, [op = op_, left, right, promise](Lease &lease) {
            try {
                const T &a = left.fetch();
                const T &b = right.fetch();
                lease.hold();
                promise->set_value((*op)(a, b));
            } catch (...) {
                promise->set_exception(std::current_exception());
            }
        });
        return out;
    }

   private:
    std::shared_ptr<const Op> op_;
    Runtime *runtime_;
};

template <typename T, typename Op>
RemoteOp<T, Op> lift_remote(Op op, Runtime &runtime) {
    return RemoteOp<T, Op>(std::move(op), runtime);
}

/// A store of future handles. `get` hands out the current handle without
/// blocking; `put` swaps in a new one. Mutation belongs to the issuing thread.
template <typename T>
class FutureStore {
   public:
    explicit FutureStore(std::vector<Future<T>> cells) : cells_(std::move(cells)) {
    }

    /// One resolved future per value, cell i owned by runtime.home_of(i).
    static FutureStore seed(const std::vector<T> &values, Runtime &runtime) {
        std::vector<Future<T>> cells;
        cells.reserve(values.size());
        for (std::size_t i = 1; i <= values.size(); ++i) {
            cells.push_back(Future<T>::resolved(runtime.next_id(), runtime.home_of(i), values[i - 1]));
        }
        return FutureStore(std::move(cells));
    }

    std::size_t length() const {
        return cells_.size();
    }
    Future<T> get(std::size_t i) const {
        check_index(i, cells_.size());
        return cells_[i - 1];
    }
    void put(std::size_t i, Future<T> f) {
        check_index(i, cells_.size());
        cells_[i - 1] = std::move(f);
    }

    const std::vector<Future<T>> &cells() const {
        return cells_;
    }

    /// Blocks until every cell resolves; rethrows the first error.
    std::vector<T> fetch_all() const {
        std::vector<T> out;
        out.reserve(cells_.size());
        for (const auto &c : cells_) out.push_back(c.fetch());
        return out;
    }

   private:
    std::vector<Future<T>> cells_;
};

enum class Clock { kWall, kVirtual };

template <typename T>
struct ParallelRun {
    std::vector<T> values;
    TaskGraph graph;
    /// Simulated makespan; only set for Clock::kVirtual.
    Ticks ticks = 0;
};

/// Runs an unmodified kernel over futures spread round-robin across
/// `workers`, then fetches every cell.
template <typename K, typename T, typename Op>
ParallelRun<T> run_parallel_detailed(const K &kernel, const std::vector<T> &values, Op op, std::size_t workers,
                                     Clock clock = Clock::kWall, Ticks op_cost = 1) {
    ParallelRun<T> run;
    if (clock == Clock::kWall) {
        ThreadedRuntime runtime(workers);
        auto store = FutureStore<T>::seed(values, runtime);
        kernel(store, lift_remote<T>(std::move(op), runtime));
        run.values = store.fetch_all();
        run.graph = runtime.graph();
    } else {
        VirtualRuntime runtime(workers);
        auto store = FutureStore<T>::seed(values, runtime);
        kernel(store, lift_remote<T>(std::move(op), runtime));
        run.values = store.fetch_all();
        run.graph = runtime.graph();
        run.ticks = simulate_ticks(run.graph, op_cost);
    }
    return run;
}

template <typename K, typename T, typename Op>
std::vector<T> run_parallel(const K &kernel, const std::vector<T> &values, Op op, std::size_t workers) {
    return run_parallel_detailed(kernel, values, std::move(op), workers).values;
}

}  // namespace scanforge::exec

#endif
