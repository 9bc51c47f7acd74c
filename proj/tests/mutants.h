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

#ifndef SCANFORGE_TESTS_MUTANTS_H
#define SCANFORGE_TESTS_MUTANTS_H

#include <cstddef>
#include <string_view>

#include "scanforge/kernels.h"

namespace scanforge::testing {

enum class Mutation { kWrongOffset, kSkippedStage, kTransposedOperands };

/// Brent-Kung with one deliberate defect. Used to check that verification
/// rejects broken kernels.
struct MutantBrentKung {
    Mutation mutation;

    std::string_view name() const {
        switch (mutation) {
            case Mutation::kWrongOffset:
                return "mutant-wrong-offset";
            case Mutation::kSkippedStage:
                return "mutant-skipped-stage";
            case Mutation::kTransposedOperands:
                return "mutant-transposed-operands";
        }
        return "mutant";
    }

    template <ScanStore S, typename Op>
    S &operator()(S &y, Op &&op) const {
        const std::size_t l = y.length();
        const std::size_t k = ceil_log2(l);
        const std::size_t bound = std::min(l, std::size_t{1} << k);
        auto combine = [&](std::size_t src, std::size_t dst) {
            auto a = y.get(src);
            auto b = y.get(dst);
            if (mutation == Mutation::kTransposedOperands) {
                y.put(dst, op(std::move(b), std::move(a)));
            } else {
                y.put(dst, op(std::move(a), std::move(b)));
            }
        };
        for (std::size_t j = 1; j <= k; ++j) {
            if (mutation == Mutation::kSkippedStage && j == 1) continue;
            const std::size_t step = std::size_t{1} << j;
            for (std::size_t i = step; i <= bound; i += step) {
                const std::size_t half = step / 2;
                const std::size_t src = mutation == Mutation::kWrongOffset && j == 1 ? i - half + 1 : i - half;
                combine(src, i);
            }
        }
        for (std::size_t j = k > 0 ? k - 1 : 0; j >= 1; --j) {
            const std::size_t step = std::size_t{1} << j;
            for (std::size_t i = 3 * (step / 2); i <= bound; i += step) combine(i - step / 2, i);
        }
        return y;
    }
};

inline constexpr Mutation kAllMutations[] = {Mutation::kWrongOffset, Mutation::kSkippedStage,
                                             Mutation::kTransposedOperands};

/// Serial scan that skips index 2 and reads two places back.
struct StrideTwoSerial {
    std::string_view name() const {
        return "stride-two-serial";
    }
    template <ScanStore S, typename Op>
    S &operator()(S &y, Op &&op) const {
        for (std::size_t i = 3; i <= y.length(); ++i) {
            auto a = y.get(i - 2);
            auto b = y.get(i);
            y.put(i, op(std::move(a), std::move(b)));
        }
        return y;
    }
};

}  // namespace scanforge::testing

#endif
