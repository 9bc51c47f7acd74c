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

#include "scanforge/interval.h"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace scanforge::verify {

Interval Interval::range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("interval needs lo <= hi, got " + std::to_string(lo) + ":" + std::to_string(hi));
    }
    return Interval(Range{lo, hi});
}

std::string Interval::str() const {
    if (is_identity()) return "id";
    if (is_top()) return "top";
    const auto &r = as_range();
    return std::to_string(r.lo) + ":" + std::to_string(r.hi);
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string &text) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed interval '" + text + "'");
    }
    return v;
}

}  // namespace

Interval Interval::parse(const std::string &text) {
    if (text == "id") return identity();
    if (text == "top") return top();
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("malformed interval '" + text + "' (expected lo:hi, id or top)");
    }
    std::string_view s(text);
    return range(parse_int(s.substr(0, colon), text), parse_int(s.substr(colon + 1), text));
}

std::ostream &operator<<(std::ostream &out, const Interval &v) {
    return out << v.str();
}

Interval interval_plus(const Interval &a, const Interval &b) {
    if (a.is_range() && b.is_range()) {
        const auto &x = a.as_range();
        const auto &y = b.as_range();
        return x.hi + 1 == y.lo ? Interval::range(x.lo, y.hi) : Interval::top();
    }
    if (a.is_identity() && b.is_identity()) return Interval::identity();
    if (b.is_identity()) return a;
    if (a.is_identity()) return b;
    return Interval::top();
}

}  // namespace scanforge::verify
