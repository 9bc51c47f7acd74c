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

#include "scanforge/trace.h"

#include <algorithm>
#include <unordered_map>

#include "json.hpp"

namespace scanforge::trace {

std::vector<std::size_t> infer_depths(const TraceHistory &history) {
    std::vector<std::size_t> depths;
    depths.reserve(history.size());
    std::size_t olast = 0;
    std::size_t depth = 0;
    for (const auto &t : history) {
        if (std::any_of(t.reads.begin(), t.reads.end(), [&](std::size_t r) { return r <= olast; })) {
            ++depth;
        }
        // Levels are 1-based; the first group sits at level 1.
        depths.push_back(depth + 1);
        olast = t.write;
    }
    return depths;
}

std::vector<std::size_t> touch_depths(const TraceHistory &history) {
    std::unordered_map<std::size_t, std::size_t> last;
    std::vector<std::size_t> depths;
    depths.reserve(history.size());
    for (const auto &t : history) {
        std::size_t d = 0;
        for (auto r : t.reads) d = std::max(d, last[r]);
        d = std::max(d, last[t.write]) + 1;
        for (auto r : t.reads) last[r] = d;
        last[t.write] = d;
        depths.push_back(d);
    }
    return depths;
}

std::vector<std::size_t> dataflow_depths(const TraceHistory &history) {
    std::unordered_map<std::size_t, std::size_t> produced;
    std::vector<std::size_t> depths;
    depths.reserve(history.size());
    for (const auto &t : history) {
        std::size_t d = 0;
        for (auto r : t.reads) {
            auto it = produced.find(r);
            if (it != produced.end()) d = std::max(d, it->second);
        }
        produced[t.write] = d + 1;
        depths.push_back(d + 1);
    }
    return depths;
}

std::optional<DepthMismatch> depth_disagreement(const TraceHistory &history) {
    DepthMismatch m{max_depth(infer_depths(history)), max_depth(touch_depths(history))};
    if (m.heuristic == m.dependency) return std::nullopt;
    return m;
}

std::string to_json(const TraceHistory &history) {
    auto depths = infer_depths(history);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < history.size(); ++i) {
        nlohmann::ordered_json entry;
        entry["reads"] = history[i].reads;
        entry["write"] = history[i].write;
        entry["depth"] = depths[i];
        arr.push_back(std::move(entry));
    }
    return arr.dump();
}

TraceHistory from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("trace is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw std::invalid_argument("trace must be a JSON array");
    }
    TraceHistory history;
    for (const auto &entry : doc) {
        if (!entry.is_object() || !entry.contains("reads") || !entry.contains("write") || !entry["reads"].is_array() ||
            !entry["write"].is_number_unsigned()) {
            throw std::invalid_argument("trace entry needs \"reads\" (array) and \"write\" (index): " + entry.dump());
        }
        Transaction t;
        for (const auto &r : entry["reads"]) {
            if (!r.is_number_unsigned() || r.get<std::size_t>() == 0) {
                throw std::invalid_argument("trace read index must be a positive integer: " + entry.dump());
            }
            t.reads.push_back(r.get<std::size_t>());
        }
        t.write = entry["write"].get<std::size_t>();
        if (t.write == 0) {
            throw std::invalid_argument("trace write index must be positive: " + entry.dump());
        }
        history.push_back(std::move(t));
    }
    return history;
}

}  // namespace scanforge::trace
