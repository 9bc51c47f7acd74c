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

#ifndef SCANFORGE_EXEC_SPEEDUP_H
#define SCANFORGE_EXEC_SPEEDUP_H

#include <cstdint>
#include <iosfwd>

namespace scanforge::exec {

/// Exact fraction in lowest terms, positive denominator.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Ratio of(std::int64_t num, std::int64_t den);
    double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    bool operator==(const Ratio &) const = default;
};

std::ostream &operator<<(std::ostream &out, const Ratio &r);

/// floor(log2(p / 3)) without floating point, for p >= 1.
std::int64_t floor_log2_third(std::int64_t p);

/// Predicted speedup of the Brent-Kung scan over the serial scan with one
/// datum per processor:
///   r(p) = (p - 1) / (floor(log2 p) + 1 + floor(log2(p / 3)))
/// Throws std::invalid_argument for p < 2.
Ratio speedup_model(std::int64_t p);

}  // namespace scanforge::exec

#endif
