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

#include "scanforge/ops.h"

#include <algorithm>
#include <limits>

namespace scanforge {

AssocOp<std::int64_t> add_op() {
    return {"add",
            [](const std::int64_t &a, const std::int64_t &b) {
                // Wrapping, so the operator stays associative on every input.
                return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
            },
            0};
}

AssocOp<std::int64_t> max_op() {
    return {"max", [](const std::int64_t &a, const std::int64_t &b) { return std::max(a, b); },
            std::numeric_limits<std::int64_t>::min()};
}

AssocOp<double> float_add_op() {
    return {"fadd", [](const double &a, const double &b) { return a + b; }, 0.0};
}

AssocOp<Matrix> matmul_op(std::size_t dim) {
    return {"matmul" + std::to_string(dim), [](const Matrix &a, const Matrix &b) { return a * b; },
            Matrix::identity(dim)};
}

AssocOp<std::string> concat_op() {
    return {"concat", [](const std::string &a, const std::string &b) { return a + b; }, std::string()};
}

AssocOp<verify::Interval> interval_op() {
    return {"interval", verify::interval_plus, verify::Interval::identity()};
}

const std::vector<AnyOp> &builtin_ops() {
    static const std::vector<AnyOp> catalog{
        add_op(), max_op(), float_add_op(), matmul_op(2), matmul_op(3), concat_op(), interval_op(),
    };
    return catalog;
}

std::vector<std::string> op_names() {
    std::vector<std::string> names;
    for (const auto &op : builtin_ops()) {
        names.push_back(op_name(op));
    }
    return names;
}

const AnyOp &find_op(std::string_view name) {
    for (const auto &op : builtin_ops()) {
        if (op_name(op) == name) return op;
    }
    std::string known;
    for (const auto &n : op_names()) {
        known += known.empty() ? n : ", " + n;
    }
    throw std::invalid_argument("unknown operator '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace scanforge
