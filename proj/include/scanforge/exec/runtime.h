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

#ifndef SCANFORGE_EXEC_RUNTIME_H
#define SCANFORGE_EXEC_RUNTIME_H

#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

#include "scanforge/exec/future.h"

namespace scanforge::exec {

using Ticks = std::uint64_t;

/// One issued operation: out = left + right, run on out_owner.
struct TaskNode {
    std::size_t issue_ordinal = 0;  // 1-based
    FutureId left = 0;
    FutureId right = 0;
    FutureId out = 0;
    WorkerId left_owner = 0;
    WorkerId right_owner = 0;
    WorkerId out_owner = 0;
};

/// The operations issued by one kernel run and their dependencies.
///
/// A node depends on the producers of its two operands, and on the previous
/// node (in issue order) that occupied either of its workers: a worker takes
/// part in one operation at a time, whether it computes the result or
/// supplies the left operand.
class TaskGraph {
   public:
    void add(const TaskNode &node) {
        nodes_.push_back(node);
    }
    const std::vector<TaskNode> &nodes() const {
        return nodes_;
    }
    std::size_t size() const {
        return nodes_.size();
    }
    /// 0-based positions of the nodes that must finish before node k.
    std::vector<std::size_t> predecessors(std::size_t k) const;

   private:
    std::vector<TaskNode> nodes_;
};

/// Longest dependency chain times op_cost. Throws std::logic_error if the
/// graph has a cycle.
Ticks critical_path(const TaskGraph &graph, Ticks op_cost);

/// Replays the graph on a simulated clock: every tick, each worker starts
/// the earliest-issued operation it is involved in once its operands exist.
/// Returns the makespan. Throws std::logic_error if progress stalls.
Ticks simulate_ticks(const TaskGraph &graph, Ticks op_cost);

/// Grants a task exclusive use of the workers it involves. `hold` blocks
/// until every earlier-issued task on those workers has finished.
class Lease {
   public:
    virtual ~Lease() = default;
    virtual void hold() = 0;
};

/// Where lifted operations run. Ownership of cell i starts at worker
/// (i - 1) % workers.
class Runtime {
   public:
    explicit Runtime(std::size_t workers);
    virtual ~Runtime() = default;
    Runtime(const Runtime &) = delete;
    Runtime &operator=(const Runtime &) = delete;

    std::size_t workers() const {
        return workers_;
    }
    WorkerId home_of(std::size_t cell) const {
        return (cell - 1) % workers_;
    }

    // The members below are for the issuing thread only.
    FutureId next_id() {
        return ++last_id_;
    }
    std::size_t next_ordinal() const {
        return graph_.size() + 1;
    }
    const TaskGraph &graph() const {
        return graph_;
    }

    /// Records `node` and runs `body` on node.out_owner. Never blocks.
    void dispatch(const TaskNode &node, std::function<void(Lease &)> body);

   protected:
    virtual void schedule(const TaskNode &node, std::function<void(Lease &)> body) = 0;

   private:
    std::size_t workers_;
    FutureId last_id_ = 0;
    TaskGraph graph_;
};

/// One thread per worker, each draining a FIFO task queue.
class ThreadedRuntime final : public Runtime {
   public:
    explicit ThreadedRuntime(std::size_t workers);
    /// Finishes every queued task, then joins the workers.
    ~ThreadedRuntime() override;

   protected:
    void schedule(const TaskNode &node, std::function<void(Lease &)> body) override;

   private:
    struct Port {
        std::mutex m;
        std::condition_variable cv;
        std::uint64_t serving = 0;
        std::uint64_t next = 0;
    };
    struct Worker {
        std::mutex m;
        std::condition_variable cv;
        std::deque<std::function<void()>> queue;
        bool stopping = false;
        std::thread thread;
    };
    class PortLease;

    void loop(Worker &w);

    std::vector<std::unique_ptr<Port>> ports_;
    std::vector<std::unique_ptr<Worker>> workers_;
};

/// Runs each operation immediately on the issuing thread and keeps only the
/// graph; time comes from simulate_ticks.
class VirtualRuntime final : public Runtime {
   public:
    using Runtime::Runtime;

   protected:
    void schedule(const TaskNode &node, std::function<void(Lease &)> body) override;
};

}  // namespace scanforge::exec

#endif
