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

#include "scanforge/exec/runtime.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace scanforge::exec {

namespace {

std::vector<WorkerId> involved(const TaskNode &n) {
    if (n.left_owner == n.out_owner) return {n.out_owner};
    return {n.out_owner, n.left_owner};
}

std::vector<std::vector<std::size_t>> all_predecessors(const TaskGraph &graph) {
    const auto &nodes = graph.nodes();
    std::unordered_map<FutureId, std::size_t> producer;
    for (std::size_t k = 0; k < nodes.size(); ++k) producer[nodes[k].out] = k;

    std::vector<std::vector<std::size_t>> preds(nodes.size());
    std::unordered_map<WorkerId, std::size_t> last_on_worker;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        auto &p = preds[k];
        for (FutureId f : {nodes[k].left, nodes[k].right}) {
            if (auto it = producer.find(f); it != producer.end()) p.push_back(it->second);
        }
        for (WorkerId w : involved(nodes[k])) {
            if (auto it = last_on_worker.find(w); it != last_on_worker.end()) p.push_back(it->second);
            last_on_worker[w] = k;
        }
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
    }
    return preds;
}

}  // namespace

std::vector<std::size_t> TaskGraph::predecessors(std::size_t k) const {
    return all_predecessors(*this).at(k);
}

Ticks critical_path(const TaskGraph &graph, Ticks op_cost) {
    const auto preds = all_predecessors(graph);
    const std::size_t n = preds.size();
    std::vector<std::vector<std::size_t>> succs(n);
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        for (auto p : preds[k]) {
            succs[p].push_back(k);
            ++indegree[k];
        }
    }
    // Kahn's algorithm; longest path in number of operations.
    std::vector<std::size_t> ready;
    std::vector<Ticks> length(n, 1);
    for (std::size_t k = 0; k < n; ++k) {
        if (indegree[k] == 0) ready.push_back(k);
    }
    std::size_t visited = 0;
    Ticks longest = 0;
    while (!ready.empty()) {
        auto k = ready.back();
        ready.pop_back();
        ++visited;
        longest = std::max(longest, length[k]);
        for (auto s : succs[k]) {
            length[s] = std::max(length[s], length[k] + 1);
            if (--indegree[s] == 0) ready.push_back(s);
        }
    }
    if (visited != n) {
        throw std::logic_error("task graph has a cycle");
    }
    return longest * op_cost;
}

Ticks simulate_ticks(const TaskGraph &graph, Ticks op_cost) {
    const auto &nodes = graph.nodes();
    std::unordered_map<FutureId, std::size_t> producer;
    for (std::size_t k = 0; k < nodes.size(); ++k) producer[nodes[k].out] = k;

    // Per-worker queue of the operations it takes part in, in issue order.
    std::unordered_map<WorkerId, std::deque<std::size_t>> queues;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        for (WorkerId w : involved(nodes[k])) queues[w].push_back(k);
    }

    std::vector<bool> done(nodes.size(), false);
    std::size_t remaining = nodes.size();
    Ticks rounds = 0;
    while (remaining > 0) {
        std::vector<std::size_t> starting;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            if (done[k]) continue;
            bool ok = true;
            for (WorkerId w : involved(nodes[k])) ok = ok && queues[w].front() == k;
            for (FutureId f : {nodes[k].left, nodes[k].right}) {
                auto it = producer.find(f);
                ok = ok && (it == producer.end() || done[it->second]);
            }
            if (ok) starting.push_back(k);
        }
        if (starting.empty()) {
            throw std::logic_error("simulated schedule stalled");
        }
        for (auto k : starting) {
            done[k] = true;
            --remaining;
            for (WorkerId w : involved(nodes[k])) queues[w].pop_front();
        }
        ++rounds;
    }
    return rounds * op_cost;
}

Runtime::Runtime(std::size_t workers) : workers_(workers) {
    if (workers == 0) {
        throw std::invalid_argument("need at least one worker");
    }
}

void Runtime::dispatch(const TaskNode &node, std::function<void(Lease &)> body) {
    graph_.add(node);
    schedule(node, std::move(body));
}

class ThreadedRuntime::PortLease final : public Lease {
   public:
    PortLease(std::vector<std::pair<Port *, std::uint64_t>> tickets) : tickets_(std::move(tickets)) {
    }
    ~PortLease() override {
        hold();
        for (auto &[port, ticket] : tickets_) {
            {
                std::lock_guard lock(port->m);
                port->serving = ticket + 1;
            }
            port->cv.notify_all();
        }
    }
    void hold() override {
        if (held_) return;
        for (auto &[port, ticket] : tickets_) {
            std::unique_lock lock(port->m);
            port->cv.wait(lock, [&] { return port->serving == ticket; });
        }
        held_ = true;
    }

   private:
    std::vector<std::pair<Port *, std::uint64_t>> tickets_;
    bool held_ = false;
};

ThreadedRuntime::ThreadedRuntime(std::size_t workers) : Runtime(workers) {
    for (std::size_t i = 0; i < workers; ++i) {
        ports_.push_back(std::make_unique<Port>());
        workers_.push_back(std::make_unique<Worker>());
    }
    for (auto &w : workers_) {
        w->thread = std::thread([this, worker = w.get()] { loop(*worker); });
    }
}

ThreadedRuntime::~ThreadedRuntime() {
    for (auto &w : workers_) {
        {
            std::lock_guard lock(w->m);
            w->stopping = true;
        }
        w->cv.notify_all();
    }
    for (auto &w : workers_) {
        w->thread.join();
    }
}

void ThreadedRuntime::loop(Worker &w) {
    for (;;) {
        std::function<void()> task;
        {
            std::unique_lock lock(w.m);
            w.cv.wait(lock, [&] { return w.stopping || !w.queue.empty(); });
            if (w.queue.empty()) return;
            task = std::move(w.queue.front());
            w.queue.pop_front();
        }
        task();
    }
}

void ThreadedRuntime::schedule(const TaskNode &node, std::function<void(Lease &)> body) {
    std::vector<std::pair<Port *, std::uint64_t>> tickets;
    for (WorkerId w : involved(node)) {
        Port &port = *ports_[w];
        std::lock_guard lock(port.m);
        tickets.emplace_back(&port, port.next++);
    }
    Worker &target = *workers_[node.out_owner];
    {
        std::lock_guard lock(target.m);
        target.queue.push_back([tickets = std::move(tickets), body = std::move(body)]() mutable {
            PortLease lease(std::move(tickets));
            body(lease);
        });
    }
    target.cv.notify_one();
}

void VirtualRuntime::schedule(const TaskNode &, std::function<void(Lease &)> body) {
    struct NoLease final : Lease {
        void hold() override {
        }
    } lease;
    body(lease);
}

}  // namespace scanforge::exec
