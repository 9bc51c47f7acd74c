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

#include "scanforge/verify.h"

#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace scanforge::verify {

RaceReport check_race_free(const trace::TraceHistory &history) {
    RaceReport report;
    const auto levels = trace::infer_depths(history);

    // index -> ordinal of the first transaction on the current level using it
    std::unordered_map<std::size_t, std::size_t> touched;
    std::size_t level = 0;
    for (std::size_t t = 0; t < history.size() && !report.conflicting; ++t) {
        if (levels[t] != level) {
            touched.clear();
            level = levels[t];
        }
        std::set<std::size_t> indices(history[t].reads.begin(), history[t].reads.end());
        indices.insert(history[t].write);
        for (auto idx : indices) {
            auto [it, fresh] = touched.emplace(idx, t + 1);
            if (!fresh) {
                report.ok = false;
                report.conflicting = OrdinalPair{it->second, t + 1};
                break;
            }
        }
    }

    // Hazard edges: read-after-write, write-after-write, write-after-read.
    std::unordered_map<std::size_t, std::size_t> last_writer;
    std::unordered_map<std::size_t, std::vector<std::size_t>> readers_since_write;
    for (std::size_t t = 0; t < history.size(); ++t) {
        const auto &tx = history[t];
        std::vector<std::size_t> preds;
        for (auto r : tx.reads) {
            if (auto it = last_writer.find(r); it != last_writer.end()) preds.push_back(it->second);
        }
        if (auto it = last_writer.find(tx.write); it != last_writer.end()) preds.push_back(it->second);
        for (auto p : readers_since_write[tx.write]) {
            if (p != t) preds.push_back(p);
        }
        for (auto p : preds) {
            if (levels[p] >= levels[t] && report.dag_consistent) {
                report.dag_consistent = false;
                report.first_dag_violation = t + 1;
            }
        }
        for (auto r : tx.reads) readers_since_write[r].push_back(t);
        last_writer[tx.write] = t;
        readers_since_write[tx.write].clear();
    }
    return report;
}

std::string to_json(const VerificationReport &report) {
    nlohmann::ordered_json j;
    j["kernel"] = report.kernel;
    j["n"] = report.n;
    j["ok"] = report.ok;
    j["first_top"] = report.first_top ? nlohmann::ordered_json(*report.first_top) : nlohmann::ordered_json(nullptr);
    auto conflicts = nlohmann::ordered_json::array();
    if (report.race.conflicting) {
        conflicts.push_back({report.race.conflicting->first, report.race.conflicting->second});
    }
    j["conflicts"] = conflicts;
    j["dag_consistent"] = report.race.dag_consistent;
    return j.dump();
}

VerificationReport verify_serial(const Kernel &kernel, std::size_t n) {
    return std::visit([n](const auto &k) { return verify_serial(k, n); }, kernel);
}

VerificationReport verify_parallel(const Kernel &kernel, std::size_t n) {
    return std::visit([n](const auto &k) { return verify_parallel(k, n); }, kernel);
}

}  // namespace scanforge::verify
