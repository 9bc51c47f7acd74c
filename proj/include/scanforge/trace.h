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

#ifndef SCANFORGE_TRACE_H
#define SCANFORGE_TRACE_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scanforge/store.h"

namespace scanforge::trace {

/// Placeholder element handed out by TraceStore::get.
struct Unit {
    bool operator==(const Unit &) const = default;
};

/// Combines placeholders so kernels run unmodified over a TraceStore.
struct UnitOp {
    Unit operator()(Unit, Unit) const {
        return {};
    }
};

/// The reads issued since the previous write, paired with that write.
struct Transaction {
    std::vector<std::size_t> reads;
    std::size_t write = 0;
    bool operator==(const Transaction &) const = default;
};

using TraceHistory = std::vector<Transaction>;

/// A store that holds no data and records index accesses instead.
///
/// Only code whose every `put` consumes all data read since the previous
/// `put`, and whose control flow does not depend on element values, is
/// traced faithfully. Scan kernels satisfy both.
class TraceStore {
   public:
    explicit TraceStore(std::size_t length) : length_(length) {
    }

    std::size_t length() const {
        return length_;
    }

    Unit get(std::size_t i) {
        check_index(i, length_);
        pending_reads_.push_back(i);
        return {};
    }

    void put(std::size_t i, Unit) {
        check_index(i, length_);
        history_.push_back({std::move(pending_reads_), i});
        pending_reads_.clear();
    }

    const std::vector<std::size_t> &pending_reads() const {
        return pending_reads_;
    }
    const TraceHistory &history() const {
        return history_;
    }
    TraceHistory take_history() && {
        return std::move(history_);
    }

   private:
    std::size_t length_;
    std::vector<std::size_t> pending_reads_;
    TraceHistory history_;
};

/// Runs `kernel` on a fresh TraceStore(n) with the placeholder operator.
template <typename K>
TraceHistory run_traced(const K &kernel, std::size_t n) {
    TraceStore store(n);
    kernel(store, UnitOp{});
    return std::move(store).take_history();
}

/// Stage level (1-based) of each transaction, by the left-to-right
/// heuristic: a transaction that reads an index at or below the most recent
/// write starts a new level. Assumes a serialized left-to-right kernel.
std::vector<std::size_t> infer_depths(const TraceHistory &history);

/// Longest-path level in the DAG that orders every pair of transactions
/// touching (reading or writing) a common index.
std::vector<std::size_t> touch_depths(const TraceHistory &history);

/// Longest-path level using read-after-write dependencies only.
std::vector<std::size_t> dataflow_depths(const TraceHistory &history);

struct DepthMismatch {
    std::size_t heuristic;
    std::size_t dependency;
};

/// Set when the heuristic stage count differs from the longest path of
/// touch_depths.
std::optional<DepthMismatch> depth_disagreement(const TraceHistory &history);

inline std::size_t max_depth(const std::vector<std::size_t> &depths) {
    std::size_t m = 0;
    for (auto d : depths) m = d > m ? d : m;
    return m;
}

/// JSON array of {"reads":[...],"write":i,"depth":d}, one line, keys in that
/// order.
std::string to_json(const TraceHistory &history);

/// Parses the to_json format ("depth" is optional and ignored). Throws
/// std::invalid_argument on malformed input.
TraceHistory from_json(const std::string &text);

/// Re-executes the transactions on concrete values: each write index gets
/// the left fold of op over its reads.
template <typename T, typename Op>
std::vector<T> replay(const TraceHistory &history, std::vector<T> values, Op &&op) {
    for (const auto &t : history) {
        if (t.reads.empty()) {
            throw std::invalid_argument("cannot replay a transaction without reads");
        }
        check_index(t.write, values.size());
        check_index(t.reads[0], values.size());
        T acc = values[t.reads[0] - 1];
        for (std::size_t r = 1; r < t.reads.size(); ++r) {
            check_index(t.reads[r], values.size());
            acc = op(acc, values[t.reads[r] - 1]);
        }
        values[t.write - 1] = std::move(acc);
    }
    return values;
}

}  // namespace scanforge::trace

#endif
