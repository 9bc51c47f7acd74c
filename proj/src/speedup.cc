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

#include "scanforge/exec/speedup.h"

#include <numeric>
#include <ostream>
#include <stdexcept>

#include "scanforge/kernels.h"

namespace scanforge::exec {

Ratio Ratio::of(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("ratio with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    auto g = std::gcd(num, den);
    if (g == 0) g = 1;
    return {num / g, den / g};
}

std::ostream &operator<<(std::ostream &out, const Ratio &r) {
    return out << r.num << '/' << r.den;
}

std::int64_t floor_log2_third(std::int64_t p) {
    if (p < 1) {
        throw std::invalid_argument("floor_log2_third needs p >= 1");
    }
    if (p < 3) return p == 1 ? -2 : -1;
    // Largest m with 3 * 2^m <= p.
    std::int64_t m = 0;
    while (3 * (std::int64_t{1} << (m + 1)) <= p) ++m;
    return m;
}

Ratio speedup_model(std::int64_t p) {
    if (p < 2) {
        throw std::invalid_argument("speedup model needs p >= 2");
    }
    const auto depth = static_cast<std::int64_t>(floor_log2(static_cast<std::size_t>(p))) + 1 + floor_log2_third(p);
    return Ratio::of(p - 1, depth);
}

}  // namespace scanforge::exec
