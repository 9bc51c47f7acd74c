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

#ifndef SCANFORGE_VERIFY_H
#define SCANFORGE_VERIFY_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scanforge/interval.h"
#include "scanforge/kernels.h"
#include "scanforge/store.h"
#include "scanforge/trace.h"

namespace scanforge::verify {

/// Transaction ordinals are 1-based throughout this module.
using OrdinalPair = std::pair<std::size_t, std::size_t>;

struct RaceReport {
    bool ok = true;
    /// First pair of same-level transactions touching a common index.
    std::optional<OrdinalPair> conflicting;
    /// Whether every read/write hazard points from a strictly earlier level.
    bool dag_consistent = true;
    std::optional<std::size_t> first_dag_violation;
};

struct VerificationReport {
    std::string kernel;
    std::size_t n = 0;
    bool ok = false;
    std::vector<Interval> output;
    std::vector<Interval> expected;
    std::optional<std::size_t> first_top;
    bool serial_ok = false;
    bool race_checked = false;
    RaceReport race;
};

/// Level-based race check over a recorded history. Levels come from
/// trace::infer_depths; two transactions on one level must not share any
/// index, read or written.
RaceReport check_race_free(const trace::TraceHistory &history);

/// {"kernel","n","ok","first_top","conflicts","dag_consistent"}
std::string to_json(const VerificationReport &report);

namespace detail {

template <typename K>
std::string name_of(const K &kernel) {
    if constexpr (requires { kernel.name(); }) {
        return std::string(kernel.name());
    } else {
        return "kernel";
    }
}

// Interval addition that remembers the first application producing Top.
struct TopWatch {
    std::size_t *count;
    std::optional<std::size_t> *first_top;
    Interval operator()(const Interval &a, const Interval &b) const {
        Interval r = interval_plus(a, b);
        ++*count;
        if (r.is_top() && !first_top->has_value()) *first_top = *count;
        return r;
    }
};

}  // namespace detail

/// Runs the kernel on [k:k for k = 1..n] under interval addition. A serial
/// scan kernel is correct for n inputs iff the result is [1:k for k = 1..n].
template <typename K>
VerificationReport verify_serial(const K &kernel, std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("verification needs n >= 1");
    }
    VerificationReport report;
    report.kernel = detail::name_of(kernel);
    report.n = n;
    std::vector<Interval> input;
    for (std::size_t k = 1; k <= n; ++k) {
        input.push_back(Interval::range(std::int64_t(k), std::int64_t(k)));
        report.expected.push_back(Interval::range(1, std::int64_t(k)));
    }
    VectorStore<Interval> store(std::move(input));
    std::size_t count = 0;
    kernel(store, detail::TopWatch{&count, &report.first_top});
    report.output = store.values();
    report.serial_ok = report.output == report.expected;
    report.ok = report.serial_ok;
    return report;
}

template <typename K>
RaceReport verify_race_free(const K &kernel, std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("verification needs n >= 1");
    }
    return check_race_free(trace::run_traced(kernel, n));
}

/// A parallel kernel is correct if it is race free and its serialization is
/// correct.
template <typename K>
VerificationReport verify_parallel(const K &kernel, std::size_t n) {
    VerificationReport report = verify_serial(kernel, n);
    report.race = verify_race_free(kernel, n);
    report.race_checked = true;
    report.ok = report.serial_ok && report.race.ok;
    return report;
}

/// Runtime-selected kernel variants.
VerificationReport verify_serial(const Kernel &kernel, std::size_t n);
VerificationReport verify_parallel(const Kernel &kernel, std::size_t n);

}  // namespace scanforge::verify

#endif
