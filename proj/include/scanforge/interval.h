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

#ifndef SCANFORGE_INTERVAL_H
#define SCANFORGE_INTERVAL_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

namespace scanforge::verify {

/// Element of the interval monoid: a contiguous 1-based index range
/// [lo, hi], the identity (empty interval), or the absorbing Top that stands
/// for a noncontiguous partial sum.
class Interval {
   public:
    struct Range {
        std::int64_t lo;
        std::int64_t hi;
        bool operator==(const Range &) const = default;
    };
    struct Identity {
        bool operator==(const Identity &) const = default;
    };
    struct Top {
        bool operator==(const Top &) const = default;
    };

    /// Identity by default.
    Interval() = default;

    /// Throws std::invalid_argument unless lo <= hi.
    static Interval range(std::int64_t lo, std::int64_t hi);
    static Interval identity() {
        return Interval(Identity{});
    }
    static Interval top() {
        return Interval(Top{});
    }

    bool is_range() const {
        return std::holds_alternative<Range>(v_);
    }
    bool is_identity() const {
        return std::holds_alternative<Identity>(v_);
    }
    bool is_top() const {
        return std::holds_alternative<Top>(v_);
    }
    /// Precondition: is_range().
    const Range &as_range() const {
        return std::get<Range>(v_);
    }

    /// "lo:hi", "id" or "top".
    std::string str() const;
    /// Inverse of str(); throws std::invalid_argument on malformed text.
    static Interval parse(const std::string &text);

    bool operator==(const Interval &) const = default;

   private:
    explicit Interval(std::variant<Identity, Top, Range> v) : v_(v) {
    }
    std::variant<Identity, Top, Range> v_;
};

std::ostream &operator<<(std::ostream &out, const Interval &v);

/// The interval monoid operator. Cases are tried most-specific first:
///   1. range + range: merged when contiguous, Top otherwise
///   2. id + id = id
///   3. x + id = x
///   4. id + x = x
///   5. anything else (some operand is Top) = Top
Interval interval_plus(const Interval &a, const Interval &b);

}  // namespace scanforge::verify

#endif
